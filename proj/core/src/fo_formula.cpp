#include "hta/fo/formula.hpp"

#include <algorithm>

#include "hta/error.hpp"

namespace hta::fo {

const char* sort_str(Sort s) { return s == Sort::Integer ? "int" : "generic"; }

const char* arith_op_str(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
  }
  return "?";
}

Sort sort_of(const FOTerm& t) {
  if (const auto* c = t.get_if<FOTerm::Const>())
    return c->value.is_numeral() ? Sort::Integer : Sort::Generic;
  if (const auto* v = t.get_if<FOTerm::Var>()) return v->var.sort;
  return Sort::Integer;  // arithmetic terms
}

FOTermPtr obj_const(Precomputed value) {
  return std::make_shared<FOTerm>(FOTerm::Const{std::move(value)});
}
FOTermPtr numeral(Int value) { return obj_const(Precomputed::numeral(std::move(value))); }
FOTermPtr term_var(TypedVar v) { return std::make_shared<FOTerm>(FOTerm::Var{std::move(v)}); }
FOTermPtr int_var(std::string name) { return term_var({std::move(name), Sort::Integer}); }
FOTermPtr gen_var(std::string name) { return term_var({std::move(name), Sort::Generic}); }

FOTermPtr arith(ArithOp op, FOTermPtr lhs, FOTermPtr rhs) {
  if (sort_of(*lhs) != Sort::Integer)
    throw SortError("operand `" + to_string(*lhs) + "` of `" + arith_op_str(op) +
                    "` must have sort int");
  if (sort_of(*rhs) != Sort::Integer)
    throw SortError("operand `" + to_string(*rhs) + "` of `" + arith_op_str(op) +
                    "` must have sort int");
  return std::make_shared<FOTerm>(FOTerm::Arith{op, std::move(lhs), std::move(rhs)});
}

bool equal(const FOTerm& a, const FOTerm& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* c = a.get_if<FOTerm::Const>())
    return c->value == b.get_if<FOTerm::Const>()->value;
  if (const auto* v = a.get_if<FOTerm::Var>()) return v->var == b.get_if<FOTerm::Var>()->var;
  const auto* x = a.get_if<FOTerm::Arith>();
  const auto* y = b.get_if<FOTerm::Arith>();
  return x->op == y->op && equal(*x->lhs, *y->lhs) && equal(*x->rhs, *y->rhs);
}

namespace {

int arith_level(ArithOp op) { return op == ArithOp::Mul ? 2 : 1; }

void print_term(std::string& out, const FOTerm& t, int min_level) {
  if (const auto* a = t.get_if<FOTerm::Arith>()) {
    int level = arith_level(a->op);
    bool parens = level < min_level;
    if (parens) out += "(";
    print_term(out, *a->lhs, level);
    out += arith_op_str(a->op);
    print_term(out, *a->rhs, level + 1);
    if (parens) out += ")";
    return;
  }
  if (const auto* c = t.get_if<FOTerm::Const>()) {
    bool parens = c->value.is_numeral() && c->value.value() < 0 && min_level > 0;
    if (parens) out += "(";
    out += c->value.str();
    if (parens) out += ")";
    return;
  }
  out += t.get_if<FOTerm::Var>()->var.name;
}

}  // namespace

std::string to_string(const FOTerm& t) {
  std::string out;
  print_term(out, t, 0);
  return out;
}

FOFormulaPtr pred(std::string name, std::vector<FOTermPtr> args) {
  return std::make_shared<FOFormula>(FOFormula::Pred{std::move(name), std::move(args)});
}
FOFormulaPtr cmp(FOTermPtr left, Rel rel, FOTermPtr right) {
  return std::make_shared<FOFormula>(FOFormula::Cmp{std::move(left), rel, std::move(right)});
}
FOFormulaPtr bottom() { return std::make_shared<FOFormula>(FOFormula::Bottom{}); }
FOFormulaPtr conj(FOFormulaPtr lhs, FOFormulaPtr rhs) {
  return std::make_shared<FOFormula>(FOFormula::And{std::move(lhs), std::move(rhs)});
}
FOFormulaPtr disj(FOFormulaPtr lhs, FOFormulaPtr rhs) {
  return std::make_shared<FOFormula>(FOFormula::Or{std::move(lhs), std::move(rhs)});
}
FOFormulaPtr implies(FOFormulaPtr lhs, FOFormulaPtr rhs) {
  return std::make_shared<FOFormula>(FOFormula::Implies{std::move(lhs), std::move(rhs)});
}
FOFormulaPtr neg(FOFormulaPtr f) { return implies(std::move(f), bottom()); }
FOFormulaPtr iff(FOFormulaPtr lhs, FOFormulaPtr rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}
FOFormulaPtr forall(TypedVar v, FOFormulaPtr body) {
  return std::make_shared<FOFormula>(FOFormula::Forall{std::move(v), std::move(body)});
}
FOFormulaPtr exists(TypedVar v, FOFormulaPtr body) {
  return std::make_shared<FOFormula>(FOFormula::Exists{std::move(v), std::move(body)});
}

const FOFormulaPtr* negated_operand(const FOFormula& f) {
  if (const auto* imp = f.get_if<FOFormula::Implies>())
    if (imp->rhs->get_if<FOFormula::Bottom>()) return &imp->lhs;
  return nullptr;
}

bool equal(const FOFormula& a, const FOFormula& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* p = a.get_if<FOFormula::Pred>()) {
    const auto* q = b.get_if<FOFormula::Pred>();
    if (p->name != q->name || p->args.size() != q->args.size()) return false;
    for (size_t i = 0; i < p->args.size(); ++i)
      if (!equal(*p->args[i], *q->args[i])) return false;
    return true;
  }
  if (const auto* c = a.get_if<FOFormula::Cmp>()) {
    const auto* d = b.get_if<FOFormula::Cmp>();
    return c->rel == d->rel && equal(*c->left, *d->left) && equal(*c->right, *d->right);
  }
  if (a.get_if<FOFormula::Bottom>()) return true;
  if (const auto* x = a.get_if<FOFormula::And>()) {
    const auto* y = b.get_if<FOFormula::And>();
    return equal(*x->lhs, *y->lhs) && equal(*x->rhs, *y->rhs);
  }
  if (const auto* x = a.get_if<FOFormula::Or>()) {
    const auto* y = b.get_if<FOFormula::Or>();
    return equal(*x->lhs, *y->lhs) && equal(*x->rhs, *y->rhs);
  }
  if (const auto* x = a.get_if<FOFormula::Implies>()) {
    const auto* y = b.get_if<FOFormula::Implies>();
    return equal(*x->lhs, *y->lhs) && equal(*x->rhs, *y->rhs);
  }
  if (const auto* x = a.get_if<FOFormula::Forall>()) {
    const auto* y = b.get_if<FOFormula::Forall>();
    return x->var == y->var && equal(*x->body, *y->body);
  }
  const auto* x = a.get_if<FOFormula::Exists>();
  const auto* y = b.get_if<FOFormula::Exists>();
  return x->var == y->var && equal(*x->body, *y->body);
}

namespace {

// Bound-variable correspondence for alpha comparison.  A quantifier binds
// exactly the occurrences matching its variable's name and sort; lookup
// therefore goes innermost-first on (name, sort).
struct AlphaEnv {
  std::vector<std::pair<TypedVar, TypedVar>> scopes;

  // Returns the matching scope index from the top, or -1 if free.
  int find_left(const TypedVar& v) const {
    for (int i = static_cast<int>(scopes.size()) - 1; i >= 0; --i)
      if (scopes[i].first == v) return i;
    return -1;
  }
  int find_right(const TypedVar& v) const {
    for (int i = static_cast<int>(scopes.size()) - 1; i >= 0; --i)
      if (scopes[i].second == v) return i;
    return -1;
  }
};

bool alpha_term(const FOTerm& a, const FOTerm& b, const AlphaEnv& env) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* c = a.get_if<FOTerm::Const>())
    return c->value == b.get_if<FOTerm::Const>()->value;
  if (const auto* v = a.get_if<FOTerm::Var>()) {
    const auto* w = b.get_if<FOTerm::Var>();
    int i = env.find_left(v->var);
    int j = env.find_right(w->var);
    if (i != j) return false;
    if (i == -1) return v->var == w->var;  // both free
    return true;
  }
  const auto* x = a.get_if<FOTerm::Arith>();
  const auto* y = b.get_if<FOTerm::Arith>();
  return x->op == y->op && alpha_term(*x->lhs, *y->lhs, env) && alpha_term(*x->rhs, *y->rhs, env);
}

bool alpha_formula(const FOFormula& a, const FOFormula& b, AlphaEnv& env) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* p = a.get_if<FOFormula::Pred>()) {
    const auto* q = b.get_if<FOFormula::Pred>();
    if (p->name != q->name || p->args.size() != q->args.size()) return false;
    for (size_t i = 0; i < p->args.size(); ++i)
      if (!alpha_term(*p->args[i], *q->args[i], env)) return false;
    return true;
  }
  if (const auto* c = a.get_if<FOFormula::Cmp>()) {
    const auto* d = b.get_if<FOFormula::Cmp>();
    return c->rel == d->rel && alpha_term(*c->left, *d->left, env) &&
           alpha_term(*c->right, *d->right, env);
  }
  if (a.get_if<FOFormula::Bottom>()) return true;
  if (const auto* x = a.get_if<FOFormula::And>()) {
    const auto* y = b.get_if<FOFormula::And>();
    return alpha_formula(*x->lhs, *y->lhs, env) && alpha_formula(*x->rhs, *y->rhs, env);
  }
  if (const auto* x = a.get_if<FOFormula::Or>()) {
    const auto* y = b.get_if<FOFormula::Or>();
    return alpha_formula(*x->lhs, *y->lhs, env) && alpha_formula(*x->rhs, *y->rhs, env);
  }
  if (const auto* x = a.get_if<FOFormula::Implies>()) {
    const auto* y = b.get_if<FOFormula::Implies>();
    return alpha_formula(*x->lhs, *y->lhs, env) && alpha_formula(*x->rhs, *y->rhs, env);
  }
  if (const auto* x = a.get_if<FOFormula::Forall>()) {
    const auto* y = b.get_if<FOFormula::Forall>();
    if (x->var.sort != y->var.sort) return false;
    env.scopes.emplace_back(x->var, y->var);
    bool ok = alpha_formula(*x->body, *y->body, env);
    env.scopes.pop_back();
    return ok;
  }
  const auto* x = a.get_if<FOFormula::Exists>();
  const auto* y = b.get_if<FOFormula::Exists>();
  if (x->var.sort != y->var.sort) return false;
  env.scopes.emplace_back(x->var, y->var);
  bool ok = alpha_formula(*x->body, *y->body, env);
  env.scopes.pop_back();
  return ok;
}

// Formula printing, minimal parentheses.  Binding strength, weakest first:
// -> (right-assoc), |, &, not/quantifiers.
enum Level { kImp = 0, kOr = 1, kAnd = 2, kUnary = 3 };

void print_formula(std::string& out, const FOFormula& f, int min_level) {
  if (const auto* p = f.get_if<FOFormula::Pred>()) {
    out += p->name;
    if (!p->args.empty()) {
      out += "(";
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i > 0) out += ",";
        out += to_string(*p->args[i]);
      }
      out += ")";
    }
    return;
  }
  if (const auto* c = f.get_if<FOFormula::Cmp>()) {
    out += to_string(*c->left);
    out += " ";
    out += rel_str(c->rel);
    out += " ";
    out += to_string(*c->right);
    return;
  }
  if (f.get_if<FOFormula::Bottom>()) {
    out += "#false";
    return;
  }
  if (const auto* n = negated_operand(f)) {
    out += "not ";
    print_formula(out, **n, kUnary);
    return;
  }
  if (const auto* x = f.get_if<FOFormula::And>()) {
    bool parens = min_level > kAnd;
    if (parens) out += "(";
    print_formula(out, *x->lhs, kAnd + 1);
    out += " & ";
    print_formula(out, *x->rhs, kAnd);  // right-associative
    if (parens) out += ")";
    return;
  }
  if (const auto* x = f.get_if<FOFormula::Or>()) {
    bool parens = min_level > kOr;
    if (parens) out += "(";
    print_formula(out, *x->lhs, kOr + 1);
    out += " | ";
    print_formula(out, *x->rhs, kOr);  // right-associative
    if (parens) out += ")";
    return;
  }
  if (const auto* x = f.get_if<FOFormula::Implies>()) {
    bool parens = min_level > kImp;
    if (parens) out += "(";
    print_formula(out, *x->lhs, kImp + 1);
    out += " -> ";
    print_formula(out, *x->rhs, kImp);  // right-associative
    if (parens) out += ")";
    return;
  }
  const char* kw = f.get_if<FOFormula::Forall>() ? "forall" : "exists";
  const TypedVar& v = f.get_if<FOFormula::Forall>() ? f.get_if<FOFormula::Forall>()->var
                                                    : f.get_if<FOFormula::Exists>()->var;
  const FOFormulaPtr& body = f.get_if<FOFormula::Forall>() ? f.get_if<FOFormula::Forall>()->body
                                                           : f.get_if<FOFormula::Exists>()->body;
  out += kw;
  out += " ";
  if (v.sort == Sort::Integer) out += "int ";
  out += v.name;
  out += " (";
  print_formula(out, *body, 0);
  out += ")";
}

}  // namespace

bool alpha_equal(const FOFormula& a, const FOFormula& b) {
  AlphaEnv env;
  return alpha_formula(a, b, env);
}

std::string to_string(const FOFormula& f) {
  std::string out;
  print_formula(out, f, 0);
  return out;
}

}  // namespace hta::fo
