#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hta/fo/formula.hpp"

namespace hta::fo {

// Sorts of variables that may occur free; names not listed default to
// generic.  Bound variables take their sort from the quantifier
// (`forall int N (...)`), shadowing by name.
using Declarations = std::map<std::string, Sort>;

// Parses the textual formula syntax: `&`, `|`, `->`, `<->`, `not`,
// `#false`, `forall X (...)`, `exists int N (...)`, comparisons
// `= != < > <= >=` (chains expand left-to-right into conjunctions), terms
// over + - * with `#inf`/`#sup` and integer literals.
FOFormulaPtr parse_formula(std::string_view text, const Declarations& decls = {});

FOTermPtr parse_fo_term(std::string_view text, const Declarations& decls = {});

}  // namespace hta::fo
