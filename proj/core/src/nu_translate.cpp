#include "hta/nu/translate.hpp"

#include <algorithm>
#include <set>

#include "hta/error.hpp"
#include "hta/fo/ops.hpp"
#include "hta/mg/regular.hpp"

namespace hta::nu {

namespace {

using mg::PTerm;

void scan_term(const PTerm& t, bool under_op, bool in_interval_cmp,
               std::vector<std::string>* order, std::set<std::string>* promoted) {
  if (const auto* v = t.get_if<PTerm::Var>()) {
    if (std::find(order->begin(), order->end(), v->name) == order->end())
      order->push_back(v->name);
    if (under_op || in_interval_cmp) promoted->insert(v->name);
    return;
  }
  if (const auto* o = t.get_if<PTerm::BinOp>()) {
    scan_term(*o->lhs, true, in_interval_cmp, order, promoted);
    scan_term(*o->rhs, true, in_interval_cmp, order, promoted);
  }
}

bool contains_interval(const PTerm& t) {
  if (const auto* o = t.get_if<PTerm::BinOp>())
    return o->op == mg::TermOp::Interval || contains_interval(*o->lhs) ||
           contains_interval(*o->rhs);
  return false;
}

std::string rule_violation_summary(const std::vector<mg::RuleViolation>& vs) {
  std::string msg;
  for (const auto& v : vs) {
    if (!msg.empty()) msg += "; ";
    msg += to_string(v);
  }
  return msg;
}

// Variables in first-occurrence order (head before body) plus the set of
// variables that must become integer variables.
void scan_rule(const mg::Rule& r, std::vector<std::string>* order,
               std::set<std::string>* promoted) {
  if (r.head.atom)
    for (const auto& arg : r.head.atom->args) scan_term(*arg, false, false, order, promoted);
  for (const auto& elem : r.body) {
    if (const auto* lit = std::get_if<mg::Literal>(&elem)) {
      for (const auto& arg : lit->atom.args) scan_term(*arg, false, false, order, promoted);
      continue;
    }
    const auto& cmp = std::get<mg::Comparison>(elem);
    bool second = contains_interval(*cmp.left) || contains_interval(*cmp.right);
    scan_term(*cmp.left, false, second, order, promoted);
    scan_term(*cmp.right, false, second, order, promoted);
  }
}

}  // namespace

IntVarPlan plan_integer_vars(const mg::Rule& r) {
  if (!mg::is_regular(r))
    throw Error("rule `" + mg::to_string(r) +
                "` is not regular: " + rule_violation_summary(mg::check_regular_rule(r)));

  std::vector<std::string> order;
  std::set<std::string> promoted;
  scan_rule(r, &order, &promoted);

  IntVarPlan plan;
  int next = 1;
  auto fresh = [&]() {
    std::string name;
    do {
      name = "N" + std::to_string(next++);
    } while (std::find(order.begin(), order.end(), name) != order.end());
    return name;
  };
  for (const auto& x : order)
    if (promoted.count(x)) plan.promoted.emplace_back(x, fresh());
  return plan;
}

fo::FOTermPtr p2f(const mg::PTerm& t, const IntVarPlan& plan) {
  if (const auto* n = t.get_if<PTerm::Numeral>()) return fo::numeral(n->value);
  if (const auto* s = t.get_if<PTerm::Symbol>())
    return fo::obj_const(Precomputed::symbol(s->name));
  if (t.get_if<PTerm::Inf>()) return fo::obj_const(Precomputed::inf());
  if (t.get_if<PTerm::Sup>()) return fo::obj_const(Precomputed::sup());
  if (const auto* v = t.get_if<PTerm::Var>()) {
    if (const std::string* n = plan.partner(v->name)) return fo::int_var(*n);
    return fo::gen_var(v->name);
  }
  const auto* o = t.get_if<PTerm::BinOp>();
  fo::ArithOp op;
  switch (o->op) {
    case mg::TermOp::Add: op = fo::ArithOp::Add; break;
    case mg::TermOp::Sub: op = fo::ArithOp::Sub; break;
    case mg::TermOp::Mul: op = fo::ArithOp::Mul; break;
    default:
      throw Error("term `" + mg::to_string(t) + "` is not of the first kind");
  }
  return fo::arith(op, p2f(*o->lhs, plan), p2f(*o->rhs, plan));
}

namespace {

fo::FOFormulaPtr atom_formula(const mg::Atom& atom, const IntVarPlan& plan) {
  std::vector<fo::FOTermPtr> args;
  args.reserve(atom.args.size());
  for (const auto& a : atom.args) args.push_back(p2f(*a, plan));
  return fo::pred(atom.predicate, std::move(args));
}

}  // namespace

fo::FOFormulaPtr nu_rule(const mg::Rule& r) {
  auto violations = mg::check_regular_rule(r);
  if (!violations.empty()) {
    for (const auto& v : violations)
      if (v.kind == mg::RuleViolation::Kind::IntervalInHead)
        throw Error("unsupported head: " + v.message);
    throw Error("rule `" + mg::to_string(r) +
                "` is not regular: " + rule_violation_summary(violations));
  }

  IntVarPlan plan = plan_integer_vars(r);

  std::vector<fo::FOFormulaPtr> conjuncts;
  for (const auto& elem : r.body) {
    if (const auto* lit = std::get_if<mg::Literal>(&elem)) {
      fo::FOFormulaPtr f = atom_formula(lit->atom, plan);
      for (int i = 0; i < lit->negations; ++i) f = fo::neg(std::move(f));
      conjuncts.push_back(std::move(f));
      continue;
    }
    const auto& c = std::get<mg::Comparison>(elem);
    if (mg::term_kind(*c.right).second()) {
      // t1 = t2..t3 turns into p2f(t2) <= p2f(t1) <= p2f(t3).
      const auto* iv = c.right->get_if<PTerm::BinOp>();
      fo::FOTermPtr t1 = p2f(*c.left, plan);
      conjuncts.push_back(fo::conj(fo::cmp(p2f(*iv->lhs, plan), Rel::Le, t1),
                                   fo::cmp(t1, Rel::Le, p2f(*iv->rhs, plan))));
    } else {
      conjuncts.push_back(fo::cmp(p2f(*c.left, plan), c.rel, p2f(*c.right, plan)));
    }
  }

  fo::FOFormulaPtr head;
  switch (r.head.kind) {
    case mg::HeadKind::Basic:
      head = atom_formula(*r.head.atom, plan);
      break;
    case mg::HeadKind::Choice: {
      fo::FOFormulaPtr a = atom_formula(*r.head.atom, plan);
      head = fo::disj(a, fo::neg(a));
      break;
    }
    case mg::HeadKind::Empty:
      head = fo::bottom();
      break;
  }

  fo::FOFormulaPtr matrix;
  if (conjuncts.empty()) {
    matrix = head;
  } else {
    // Right-associated, like the formula parser's `&`.
    fo::FOFormulaPtr body = conjuncts.back();
    for (size_t i = conjuncts.size() - 1; i-- > 0;) body = fo::conj(conjuncts[i], std::move(body));
    matrix = fo::implies(std::move(body), std::move(head));
  }

  // Quantify in first-occurrence order, outermost first.
  std::vector<std::string> order;
  std::set<std::string> promoted_names;
  scan_rule(r, &order, &promoted_names);
  for (size_t i = order.size(); i-- > 0;) {
    const std::string& x = order[i];
    if (const std::string* n = plan.partner(x))
      matrix = fo::forall({*n, fo::Sort::Integer}, std::move(matrix));
    else
      matrix = fo::forall({x, fo::Sort::Generic}, std::move(matrix));
  }

  if (!fo::is_closed(*matrix))
    throw Error("internal: translation of `" + mg::to_string(r) + "` is not closed");
  return matrix;
}

std::vector<fo::FOFormulaPtr> nu_program(const mg::Program& p) {
  std::vector<fo::FOFormulaPtr> out;
  std::vector<TranslationError::RuleFailure> failures;
  for (size_t i = 0; i < p.rules().size(); ++i) {
    try {
      out.push_back(nu_rule(p.rules()[i]));
    } catch (const Error& e) {
      failures.push_back({i, mg::to_string(p.rules()[i]), e.what()});
    }
  }
  if (!failures.empty()) throw TranslationError(std::move(failures));
  return out;
}

}  // namespace hta::nu
