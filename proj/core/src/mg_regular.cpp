#include "hta/mg/regular.hpp"

namespace hta::mg {

namespace {

bool is_sym_or_inf_sup(const PTerm& t) {
  return t.get_if<PTerm::Symbol>() || t.get_if<PTerm::Inf>() || t.get_if<PTerm::Sup>();
}

// First-kind check.  `under_op` is true inside the scope of an operation.
bool first_kind(const PTerm& t, bool under_op, std::string* reason) {
  if (const auto* o = t.get_if<PTerm::BinOp>()) {
    if (o->op == TermOp::Interval || o->op == TermOp::Div || o->op == TermOp::Mod) {
      if (reason)
        *reason = std::string("operation `") + term_op_str(o->op) +
                  "` is not allowed in a term of the first kind";
      return false;
    }
    return first_kind(*o->lhs, true, reason) && first_kind(*o->rhs, true, reason);
  }
  if (under_op && is_sym_or_inf_sup(t)) {
    if (reason)
      *reason = "`" + to_string(t) + "` occurs in the scope of an operation";
    return false;
  }
  return true;
}

bool contains_sym_or_inf_sup(const PTerm& t) {
  if (is_sym_or_inf_sup(t)) return true;
  if (const auto* o = t.get_if<PTerm::BinOp>())
    return contains_sym_or_inf_sup(*o->lhs) || contains_sym_or_inf_sup(*o->rhs);
  return false;
}

bool has_second_kind_subterm(const PTerm& t) {
  if (term_kind(t).second()) return true;
  if (const auto* o = t.get_if<PTerm::BinOp>())
    return has_second_kind_subterm(*o->lhs) || has_second_kind_subterm(*o->rhs);
  return false;
}

}  // namespace

TermKind term_kind(const PTerm& t) {
  std::string reason;
  if (first_kind(t, false, &reason)) return {TermKind::Kind::RegularFirstKind, {}};

  if (const auto* o = t.get_if<PTerm::BinOp>(); o && o->op == TermOp::Interval) {
    std::string sub;
    if (!first_kind(*o->lhs, false, &sub))
      return {TermKind::Kind::Irregular,
              "interval bound `" + to_string(*o->lhs) + "` is not a term of the first kind: " + sub};
    if (!first_kind(*o->rhs, false, &sub))
      return {TermKind::Kind::Irregular,
              "interval bound `" + to_string(*o->rhs) + "` is not a term of the first kind: " + sub};
    if (contains_sym_or_inf_sup(*o->lhs) || contains_sym_or_inf_sup(*o->rhs))
      return {TermKind::Kind::Irregular,
              "interval bounds must not contain symbolic constants, #inf or #sup"};
    return {TermKind::Kind::RegularSecondKind, {}};
  }
  return {TermKind::Kind::Irregular, reason};
}

namespace {

void check_term(const PTerm& t, const std::string& where, std::vector<RuleViolation>* out) {
  TermKind k = term_kind(t);
  if (k.irregular())
    out->push_back({RuleViolation::Kind::IrregularTerm, where,
                    "irregular term `" + to_string(t) + "`: " + k.reason});
}

}  // namespace

std::vector<RuleViolation> check_regular_rule(const Rule& r) {
  std::vector<RuleViolation> out;

  if (r.head.atom) {
    for (const auto& arg : r.head.atom->args) {
      check_term(*arg, "head", &out);
      if (has_second_kind_subterm(*arg))
        out.push_back({RuleViolation::Kind::IntervalInHead, "head",
                       "head term `" + to_string(*arg) +
                           "` contains an interval; such heads are not translatable"});
    }
  }

  for (size_t i = 0; i < r.body.size(); ++i) {
    std::string where = "body element " + std::to_string(i + 1);
    if (const auto* lit = std::get_if<Literal>(&r.body[i])) {
      for (const auto& arg : lit->atom.args) {
        check_term(*arg, where, &out);
        if (has_second_kind_subterm(*arg))
          out.push_back({RuleViolation::Kind::IntervalInLiteral, where,
                         "literal `" + to_string(*lit) + "` contains an interval term"});
      }
      continue;
    }
    const auto& cmp = std::get<Comparison>(r.body[i]);
    check_term(*cmp.left, where, &out);
    check_term(*cmp.right, where, &out);
    bool left_interval = has_second_kind_subterm(*cmp.left);
    bool right_interval = has_second_kind_subterm(*cmp.right);
    if (!left_interval && !right_interval) continue;

    // The only admissible shape is t1 = t2..t3 with a first-kind left
    // operand that is not a symbolic constant, #inf or #sup.
    auto bad = [&](const std::string& message) {
      out.push_back({RuleViolation::Kind::BadIntervalComparison, where,
                     "comparison `" + to_string(cmp) + "`: " + message});
    };
    if (cmp.rel != Rel::Eq) {
      bad("an interval may appear only in a comparison of the form t1 = t2..t3");
      continue;
    }
    if (left_interval) {
      bad("the interval must be the right operand of `=`");
      continue;
    }
    if (!term_kind(*cmp.right).second()) {
      bad("the right operand must be an interval term of the second kind");
      continue;
    }
    if (!term_kind(*cmp.left).first()) {
      bad("the left operand must be a term of the first kind");
      continue;
    }
    if (is_sym_or_inf_sup(*cmp.left))
      bad("the left operand must not be a symbolic constant, #inf or #sup");
  }
  return out;
}

bool is_regular(const Rule& r) {
  for (const auto& v : check_regular_rule(r))
    if (v.kind != RuleViolation::Kind::IntervalInHead) return false;
  return true;
}

std::string to_string(const RuleViolation& v) { return v.where + ": " + v.message; }

}  // namespace hta::mg
