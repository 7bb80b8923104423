#pragma once

#include <set>
#include <utility>
#include <vector>

#include "hta/fo/formula.hpp"

namespace hta::fo {

std::set<TypedVar> free_vars(const FOTerm& t);
std::set<TypedVar> free_vars(const FOFormula& f);

bool is_closed(const FOFormula& f);

// True iff substituting `t` for free occurrences of `v` in `f` neither
// captures a variable of `t` nor breaks the sort discipline (`t` must be an
// integer term when `v` is an integer variable).  Capture is checked at the
// name level: a quantifier binding any variable whose name occurs free in
// `t` blocks the substitution.
bool is_substitutable(const FOFormula& f, const TypedVar& v, const FOTerm& t);

// F with every free occurrence of `v` replaced by `t`.  Throws
// SubstitutionError unless is_substitutable(f, v, t).
FOFormulaPtr substitute(const FOFormulaPtr& f, const TypedVar& v, const FOTermPtr& t);
FOTermPtr substitute(const FOTermPtr& term, const TypedVar& v, const FOTermPtr& t);

// Simultaneous substitution, realized through fresh intermediates from the
// reserved `_v<n>` namespace (the parsers never produce such names).
FOFormulaPtr substitute_simultaneous(const FOFormulaPtr& f,
                                     const std::vector<std::pair<TypedVar, FOTermPtr>>& subs);

// Universally quantifies the free variables of `f` in ascending
// (name, sort) order, first name outermost.  Closed formulas are returned
// unchanged.
FOFormulaPtr universal_closure(const FOFormulaPtr& f);

// Exact evaluation of a variable-free term; object constants evaluate to
// themselves and arithmetic is computed over unbounded integers.
Precomputed eval_ground_term(const FOTerm& t);

// Splits an outermost block of universal quantifiers from the body.
std::pair<std::vector<TypedVar>, FOFormulaPtr> strip_forall_prefix(const FOFormulaPtr& f);

// Alpha equality that additionally ignores the order of the outermost
// universal-quantifier block (used for comparing displayed sentences).
bool alpha_equal_modulo_prefix(const FOFormulaPtr& a, const FOFormulaPtr& b);

}  // namespace hta::fo
