#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hta/fo/formula.hpp"

namespace hta::kernel {

// Finite assumption set, duplicate-free modulo alpha equivalence.
// Insertion order is preserved for printing; all comparisons are
// set-theoretic.
class AssumptionSet {
 public:
  AssumptionSet() = default;
  explicit AssumptionSet(std::vector<fo::FOFormulaPtr> formulas);

  void insert(fo::FOFormulaPtr f);
  bool contains(const fo::FOFormula& f) const;
  AssumptionSet union_with(const AssumptionSet& other) const;
  // Set difference with a single formula (alpha match).
  AssumptionSet without(const fo::FOFormula& f) const;
  bool subset_of(const AssumptionSet& other) const;
  bool equals(const AssumptionSet& other) const;

  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const std::vector<fo::FOFormulaPtr>& items() const { return items_; }

 private:
  std::vector<fo::FOFormulaPtr> items_;
};

struct Sequent {
  AssumptionSet assumptions;
  fo::FOFormulaPtr conclusion;
};

// Alpha equality of conclusions and set equality of assumptions.
bool sequent_equal(const Sequent& a, const Sequent& b);

std::string to_string(const Sequent& s);

enum class RuleName {
  AndI,
  AndELeft,
  AndERight,
  OrILeft,
  OrIRight,
  OrE,
  ImpI,
  ImpE,
  Contradiction,
  Weakening,
  ForallI,
  ForallE,
  ExistsI,
  ExistsE,
  EqForward,
  EqBackward,
};

enum class AxiomKind {
  Identity,       // F => F
  EqReflexivity,  // => t = t
  Hosoi,
  GroupB,
  GroupC,
  GroupD,
  GroupDTrusted,
};

// Witness data for the rules that are not syntax-directed.
struct Hints {
  fo::FOTermPtr term;                   // forall-e / exists-i witness
  std::optional<fo::TypedVar> var;      // substituted variable (eq, optional forall-i)
  fo::FOFormulaPtr template_formula;    // eq: formula with marked occurrences of var
};

struct Justification {
  bool recognized = true;  // false: `spelled` names no known rule or axiom
  bool is_axiom = false;
  AxiomKind axiom = AxiomKind::Identity;
  RuleName rule = RuleName::AndI;
  std::vector<std::string> premises;  // line ids, in rule order
  Hints hints;
  std::string spelled;  // as written in the script, for messages
};

struct ProofLine {
  std::string id;
  Sequent sequent;
  Justification justification;
};

struct ProofScript {
  std::vector<fo::TypedVar> declarations;
  std::vector<ProofLine> lines;
  std::optional<Sequent> goal;
};

struct LineStatus {
  std::string id;
  bool ok = false;
  std::string message;
};

struct Verdict {
  bool accepted = false;
  std::vector<LineStatus> lines;
  std::optional<size_t> first_failure;  // index into lines
  std::string failure_reason;
  bool goal_ok = true;
  bool uses_trusted_arithmetic = false;

  std::string summary() const;
};

struct CheckOptions {
  // Disables the Hosoi schema and axiom groups B-D, leaving the plain
  // two-sorted intuitionistic system.
  bool int_mode = false;
  // Permits lines justified as trusted arithmetic; any use is surfaced in
  // the verdict.
  bool allow_trusted_arith = false;
};

}  // namespace hta::kernel
