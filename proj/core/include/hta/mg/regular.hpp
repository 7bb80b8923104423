#pragma once

#include <string>
#include <vector>

#include "hta/mg/ast.hpp"

namespace hta::mg {

// Classification of a program term for translation purposes.
struct TermKind {
  enum class Kind { RegularFirstKind, RegularSecondKind, Irregular };
  Kind kind;
  std::string reason;  // set iff Irregular

  bool first() const { return kind == Kind::RegularFirstKind; }
  bool second() const { return kind == Kind::RegularSecondKind; }
  bool irregular() const { return kind == Kind::Irregular; }
};

// A term is of the first kind if it uses only + - * and no symbolic
// constant, #inf or #sup occurs under an operation.  It is of the second
// kind if it is t1..t2 with t1, t2 of the first kind and free of symbolic
// constants, #inf and #sup.  Total and deterministic.
TermKind term_kind(const PTerm& t);

struct RuleViolation {
  enum class Kind {
    IrregularTerm,          // some term is neither first nor second kind
    IntervalInLiteral,      // a body literal contains a second-kind term
    BadIntervalComparison,  // interval comparison not of the shape t1 = t2..t3
    IntervalInHead,         // head contains a second-kind term (not translatable)
  };
  Kind kind;
  std::string where;
  std::string message;
};

// Empty result means the rule is regular and its head is translatable.
// IntervalInHead is reported separately: such a rule is still regular in
// the syntactic sense, but the translation does not cover it.
std::vector<RuleViolation> check_regular_rule(const Rule& r);

bool is_regular(const Rule& r);

std::string to_string(const RuleViolation& v);

}  // namespace hta::mg
