#pragma once

#include <string_view>

#include "hta/mg/ast.hpp"

namespace hta::mg {

// Parses a program in the textual syntax described in the README:
// `:-` between head and body, `not` for negation, `{a}` for a choice head,
// operations `+ - * / \ ..`, comparisons `= != < > <= >=`, `#inf`/`#sup`,
// `%` comments, one `.` per rule.  Throws ParseError on bad input.
Program parse_program(std::string_view text);

// Parses a single term; used by tests and by domain specifications.
PTermPtr parse_term_text(std::string_view text);

}  // namespace hta::mg
