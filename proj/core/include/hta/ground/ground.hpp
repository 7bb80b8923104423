#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hta/fo/formula.hpp"
#include "hta/mg/ast.hpp"

namespace hta::ground {

// The finite pool of precomputed terms a grounding ranges over: an
// inclusive integer interval plus symbolic constants and optionally
// #inf/#sup.  Generic variables range over the whole pool, integer
// variables over the numerals only.
struct Domain {
  Int lo = 0;
  Int hi = 0;
  std::vector<std::string> symbolic_consts;
  bool include_inf_sup = false;

  // Pool in the fixed total order: #inf, numerals ascending, symbolic
  // constants lexicographically, #sup.
  std::vector<Precomputed> pool() const;
  std::vector<Precomputed> numerals() const;
  bool contains(const Precomputed& value) const;
  std::string str() const;
};

// Domain induced by the programs: their symbolic constants, the span of
// their numerals widened by 2 on each side ([0, 1] when no numeral
// occurs), and #inf/#sup iff one of them occurs.
Domain default_domain(const std::vector<const mg::Program*>& programs);

struct GroundAtom {
  std::string pred;
  std::vector<Precomputed> args;

  std::string str() const;
};

bool operator==(const GroundAtom& a, const GroundAtom& b);
bool operator<(const GroundAtom& a, const GroundAtom& b);

using AtomSet = std::set<GroundAtom>;

class GroundFormula;
using GFPtr = std::shared_ptr<const GroundFormula>;

// Variable-free formula over precomputed atoms with truth constants and
// finite conjunctions/disjunctions of arbitrary width.
class GroundFormula {
 public:
  struct Atom {
    GroundAtom atom;
  };
  struct True {};
  struct False {};
  struct And {
    std::vector<GFPtr> members;
  };
  struct Or {
    std::vector<GFPtr> members;
  };
  struct Implies {
    GFPtr lhs;
    GFPtr rhs;
  };
  using Node = std::variant<Atom, True, False, And, Or, Implies>;

  explicit GroundFormula(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

GFPtr gatom(GroundAtom a);
GFPtr gtrue();
GFPtr gfalse();
GFPtr gand(std::vector<GFPtr> members);
GFPtr gor(std::vector<GFPtr> members);
GFPtr gimplies(GFPtr lhs, GFPtr rhs);
GFPtr gneg(GFPtr f);  // f -> #false

bool equal(const GroundFormula& a, const GroundFormula& b);
std::string to_string(const GroundFormula& f);

AtomSet atoms_of(const GroundFormula& f);

// Quantifier expansion over the domain, without simplification.
// Comparisons become truth constants, atom arguments are replaced by their
// values, and a quantifier instance is omitted when its expansion mentions
// an atom whose argument falls outside the pool.  Throws DomainError if the
// formula is open or uses an object constant outside the pool.
GFPtr ground_raw(const fo::FOFormula& f, const Domain& d);

// Truth-constant absorption; preserves both classical and here-and-there
// satisfaction.  Flattens nested conjunctions/disjunctions.
GFPtr simplify(const GFPtr& f);

// simplify(ground_raw(f, d))
GFPtr ground(const fo::FOFormula& f, const Domain& d);

// Conjunction of the groundings of several sentences.
GFPtr ground_all(const std::vector<fo::FOFormulaPtr>& sentences, const Domain& d);

}  // namespace hta::ground
