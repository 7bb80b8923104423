#include "hta/kernel/axioms.hpp"

#include "hta/fo/ops.hpp"
#include "hta/fo/text.hpp"

namespace hta::kernel {

using fo::FOFormula;
using fo::FOFormulaPtr;

bool is_axiom_identity(const Sequent& s) {
  if (s.assumptions.size() == 1)
    return fo::alpha_equal(*s.assumptions.items().front(), *s.conclusion);
  if (!s.assumptions.empty()) return false;
  const auto* c = s.conclusion->get_if<FOFormula::Cmp>();
  return c && c->rel == Rel::Eq && fo::equal(*c->left, *c->right);
}

bool is_hosoi_instance(const FOFormula& f) {
  // F | ((F -> G) | not G)
  const auto* outer = f.get_if<FOFormula::Or>();
  if (!outer) return false;
  const auto* inner = outer->rhs->get_if<FOFormula::Or>();
  if (!inner) return false;
  const auto* imp = inner->lhs->get_if<FOFormula::Implies>();
  if (!imp) return false;
  const FOFormulaPtr* negated = fo::negated_operand(*inner->rhs);
  if (!negated) return false;
  return fo::alpha_equal(*outer->lhs, *imp->lhs) && fo::alpha_equal(*imp->rhs, **negated);
}

const std::vector<FOFormulaPtr>& group_b_catalog() {
  static const std::vector<FOFormulaPtr> catalog = [] {
    std::vector<FOFormulaPtr> out;
    auto add = [&out](const char* text) { out.push_back(fo::parse_formula(text)); };
    for (const char* rel : {"=", "!=", "<", ">", "<=", ">="})
      out.push_back(fo::parse_formula("forall X Y (X " + std::string(rel) + " Y | not X " +
                                      std::string(rel) + " Y)"));
    add("forall X (X <= X)");
    add("forall X Y Z (X <= Y & Y <= Z -> X <= Z)");
    add("forall X Y (X <= Y & Y <= X -> X = Y)");
    add("forall X Y (X <= Y | Y <= X)");
    add("forall X Y (X <= Y <-> X < Y | X = Y)");
    add("forall X Y (X >= Y <-> X > Y | X = Y)");
    add("forall X Y (X < Y <-> X <= Y & not X = Y)");
    add("forall X Y (X > Y <-> X >= Y & not X = Y)");
    add("forall X Y (X != Y <-> not X = Y)");
    add("forall X Y (X > Y <-> Y < X)");
    add("forall X Y (X >= Y <-> Y <= X)");
    add("forall X (#inf <= X)");
    add("forall X (X <= #sup)");
    return out;
  }();
  return catalog;
}

bool is_group_b_axiom(const FOFormula& f) {
  for (const auto& axiom : group_b_catalog())
    if (fo::alpha_equal(f, *axiom)) return true;
  return false;
}

namespace {

// A comparison both of whose operands are object constants.
const FOFormula::Cmp* constant_comparison(const FOFormula& f) {
  const auto* c = f.get_if<FOFormula::Cmp>();
  if (!c) return nullptr;
  if (!c->left->get_if<fo::FOTerm::Const>() || !c->right->get_if<fo::FOTerm::Const>())
    return nullptr;
  return c;
}

bool eval_constant_comparison(const FOFormula::Cmp& c) {
  return eval_comparison(c.left->get_if<fo::FOTerm::Const>()->value, c.rel,
                         c.right->get_if<fo::FOTerm::Const>()->value);
}

}  // namespace

bool is_group_c_axiom(const FOFormula& f) {
  if (const auto* c = constant_comparison(f)) return eval_constant_comparison(*c);
  if (const FOFormulaPtr* negated = fo::negated_operand(f))
    if (const auto* c = constant_comparison(**negated)) return !eval_constant_comparison(*c);
  return false;
}

bool is_arithmetical(const FOFormula& f) {
  if (f.get_if<FOFormula::Pred>()) return false;
  if (const auto* c = f.get_if<FOFormula::Cmp>())
    return fo::sort_of(*c->left) == fo::Sort::Integer &&
           fo::sort_of(*c->right) == fo::Sort::Integer;
  if (f.get_if<FOFormula::Bottom>()) return true;
  if (const auto* x = f.get_if<FOFormula::And>())
    return is_arithmetical(*x->lhs) && is_arithmetical(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Or>())
    return is_arithmetical(*x->lhs) && is_arithmetical(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Implies>())
    return is_arithmetical(*x->lhs) && is_arithmetical(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Forall>()) return is_arithmetical(*x->body);
  return is_arithmetical(*f.get_if<FOFormula::Exists>()->body);
}

const std::vector<FOFormulaPtr>& group_d_catalog() {
  static const std::vector<FOFormulaPtr> catalog = [] {
    std::vector<FOFormulaPtr> out;
    auto add = [&out](const char* text) { out.push_back(fo::parse_formula(text)); };
    add("forall int M int N (M + N = N + M)");
    add("forall int M int N (M * N = N * M)");
    add("forall int M int N int K ((M + N) + K = M + (N + K))");
    add("forall int M int N int K ((M * N) * K = M * (N * K))");
    add("forall int M int N int K (M * (N + K) = M * N + M * K)");
    add("forall int M int N int K ((M + N) * K = M * K + N * K)");
    add("forall int N (N + 0 = N)");
    add("forall int N (N * 1 = N)");
    add("forall int N (N - N = 0)");
    add("forall int M int N ((M - N) + N = M)");
    add("forall int M int N (M <= N | N <= M)");
    add("forall int N (N < N + 1)");
    add("forall int N (N >= 0 | -N >= 0)");
    return out;
  }();
  return catalog;
}

namespace {

bool quantifier_free(const FOFormula& f) {
  if (f.get_if<FOFormula::Forall>() || f.get_if<FOFormula::Exists>()) return false;
  if (const auto* x = f.get_if<FOFormula::And>())
    return quantifier_free(*x->lhs) && quantifier_free(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Or>())
    return quantifier_free(*x->lhs) && quantifier_free(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Implies>())
    return quantifier_free(*x->lhs) && quantifier_free(*x->rhs);
  return true;
}

bool eval_variable_free(const FOFormula& f) {
  if (const auto* c = f.get_if<FOFormula::Cmp>())
    return eval_comparison(fo::eval_ground_term(*c->left), c->rel,
                           fo::eval_ground_term(*c->right));
  if (f.get_if<FOFormula::Bottom>()) return false;
  if (const auto* x = f.get_if<FOFormula::And>())
    return eval_variable_free(*x->lhs) && eval_variable_free(*x->rhs);
  if (const auto* x = f.get_if<FOFormula::Or>())
    return eval_variable_free(*x->lhs) || eval_variable_free(*x->rhs);
  const auto* x = f.get_if<FOFormula::Implies>();
  return !eval_variable_free(*x->lhs) || eval_variable_free(*x->rhs);
}

}  // namespace

GroupDStatus is_group_d_axiom(const FOFormula& f, bool marked_trusted, bool trust_enabled) {
  if (!is_arithmetical(f) || !fo::is_closed(f)) return GroupDStatus::No;
  if (quantifier_free(f)) {
    if (eval_variable_free(f)) return GroupDStatus::Yes;
    return GroupDStatus::No;  // an exactly false sentence is never trusted
  }
  for (const auto& axiom : group_d_catalog())
    if (fo::alpha_equal(f, *axiom)) return GroupDStatus::Yes;
  if (marked_trusted && trust_enabled) return GroupDStatus::YesTrusted;
  return GroupDStatus::No;
}

}  // namespace hta::kernel
