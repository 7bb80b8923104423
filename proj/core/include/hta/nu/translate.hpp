#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hta/fo/formula.hpp"
#include "hta/mg/ast.hpp"

namespace hta::nu {

// Which program variables get replaced by fresh integer variables: exactly
// those occurring at least once in the scope of an operation symbol or in a
// comparison containing an interval term.  Ordered by first occurrence in
// the rule (head before body, left to right); the partners N1, N2, ... are
// renamed as needed to avoid the rule's own variable names.
struct IntVarPlan {
  std::vector<std::pair<std::string, std::string>> promoted;

  const std::string* partner(const std::string& program_var) const {
    for (const auto& [x, n] : promoted)
      if (x == program_var) return &n;
    return nullptr;
  }
};

// Throws Error unless the rule is regular.
IntVarPlan plan_integer_vars(const mg::Rule& r);

// Maps a first-kind program term to a signature term: promoted variables
// become their integer partners, all others stay generic; numerals and
// symbolic constants become object constants.  Throws on terms outside the
// first kind or on unpromoted variables under an operation.
fo::FOTermPtr p2f(const mg::PTerm& t, const IntVarPlan& plan);

// The closed sentence for one regular rule whose head is free of interval
// terms: the universal closure of Body' -> Head', with the excluded-middle
// disjunction for choice heads and #false for constraints.  A rule with an
// empty body yields Head' itself.
fo::FOFormulaPtr nu_rule(const mg::Rule& r);

// One sentence per rule, in program order.  Throws TranslationError
// aggregating all per-rule failures.
std::vector<fo::FOFormulaPtr> nu_program(const mg::Program& p);

}  // namespace hta::nu
