#include "hta/fo/ops.hpp"

#include <algorithm>
#include <functional>

#include "hta/error.hpp"

namespace hta::fo {

namespace {

void collect_term_vars(const FOTerm& t, const std::vector<TypedVar>& bound,
                       std::set<TypedVar>* out) {
  if (const auto* v = t.get_if<FOTerm::Var>()) {
    if (std::find(bound.begin(), bound.end(), v->var) == bound.end()) out->insert(v->var);
    return;
  }
  if (const auto* a = t.get_if<FOTerm::Arith>()) {
    collect_term_vars(*a->lhs, bound, out);
    collect_term_vars(*a->rhs, bound, out);
  }
}

void collect_formula_vars(const FOFormula& f, std::vector<TypedVar>& bound,
                          std::set<TypedVar>* out) {
  if (const auto* p = f.get_if<FOFormula::Pred>()) {
    for (const auto& a : p->args) collect_term_vars(*a, bound, out);
    return;
  }
  if (const auto* c = f.get_if<FOFormula::Cmp>()) {
    collect_term_vars(*c->left, bound, out);
    collect_term_vars(*c->right, bound, out);
    return;
  }
  if (f.get_if<FOFormula::Bottom>()) return;
  if (const auto* x = f.get_if<FOFormula::And>()) {
    collect_formula_vars(*x->lhs, bound, out);
    collect_formula_vars(*x->rhs, bound, out);
    return;
  }
  if (const auto* x = f.get_if<FOFormula::Or>()) {
    collect_formula_vars(*x->lhs, bound, out);
    collect_formula_vars(*x->rhs, bound, out);
    return;
  }
  if (const auto* x = f.get_if<FOFormula::Implies>()) {
    collect_formula_vars(*x->lhs, bound, out);
    collect_formula_vars(*x->rhs, bound, out);
    return;
  }
  if (const auto* x = f.get_if<FOFormula::Forall>()) {
    bound.push_back(x->var);
    collect_formula_vars(*x->body, bound, out);
    bound.pop_back();
    return;
  }
  const auto* x = f.get_if<FOFormula::Exists>();
  bound.push_back(x->var);
  collect_formula_vars(*x->body, bound, out);
  bound.pop_back();
}

}  // namespace

std::set<TypedVar> free_vars(const FOTerm& t) {
  std::set<TypedVar> out;
  collect_term_vars(t, {}, &out);
  return out;
}

std::set<TypedVar> free_vars(const FOFormula& f) {
  std::set<TypedVar> out;
  std::vector<TypedVar> bound;
  collect_formula_vars(f, bound, &out);
  return out;
}

bool is_closed(const FOFormula& f) { return free_vars(f).empty(); }

namespace {

bool term_mentions(const FOTerm& t, const TypedVar& v) {
  if (const auto* w = t.get_if<FOTerm::Var>()) return w->var == v;
  if (const auto* a = t.get_if<FOTerm::Arith>())
    return term_mentions(*a->lhs, v) || term_mentions(*a->rhs, v);
  return false;
}

// Capture scan: fails when a free occurrence of `v` sits inside a
// quantifier whose name clashes with a free name of the substituted term.
bool substitutable_rec(const FOFormula& f, const TypedVar& v,
                       const std::set<std::string>& term_names, bool danger) {
  if (const auto* p = f.get_if<FOFormula::Pred>()) {
    if (!danger) return true;
    for (const auto& a : p->args)
      if (term_mentions(*a, v)) return false;
    return true;
  }
  if (const auto* c = f.get_if<FOFormula::Cmp>()) {
    if (!danger) return true;
    return !term_mentions(*c->left, v) && !term_mentions(*c->right, v);
  }
  if (f.get_if<FOFormula::Bottom>()) return true;
  if (const auto* x = f.get_if<FOFormula::And>())
    return substitutable_rec(*x->lhs, v, term_names, danger) &&
           substitutable_rec(*x->rhs, v, term_names, danger);
  if (const auto* x = f.get_if<FOFormula::Or>())
    return substitutable_rec(*x->lhs, v, term_names, danger) &&
           substitutable_rec(*x->rhs, v, term_names, danger);
  if (const auto* x = f.get_if<FOFormula::Implies>())
    return substitutable_rec(*x->lhs, v, term_names, danger) &&
           substitutable_rec(*x->rhs, v, term_names, danger);
  const TypedVar* qv = nullptr;
  const FOFormula* body = nullptr;
  if (const auto* fa = f.get_if<FOFormula::Forall>()) {
    qv = &fa->var;
    body = fa->body.get();
  } else {
    const auto* ex = f.get_if<FOFormula::Exists>();
    qv = &ex->var;
    body = ex->body.get();
  }
  if (*qv == v) return true;  // occurrences below are bound
  return substitutable_rec(*body, v, term_names, danger || term_names.count(qv->name) > 0);
}

}  // namespace

bool is_substitutable(const FOFormula& f, const TypedVar& v, const FOTerm& t) {
  if (v.sort == Sort::Integer && sort_of(t) != Sort::Integer) return false;
  std::set<std::string> names;
  for (const auto& w : free_vars(t)) names.insert(w.name);
  return substitutable_rec(f, v, names, false);
}

FOTermPtr substitute(const FOTermPtr& term, const TypedVar& v, const FOTermPtr& t) {
  if (const auto* w = term->get_if<FOTerm::Var>()) return w->var == v ? t : term;
  if (const auto* a = term->get_if<FOTerm::Arith>())
    return arith(a->op, substitute(a->lhs, v, t), substitute(a->rhs, v, t));
  return term;
}

namespace {

FOFormulaPtr substitute_rec(const FOFormulaPtr& f, const TypedVar& v, const FOTermPtr& t) {
  if (const auto* p = f->get_if<FOFormula::Pred>()) {
    std::vector<FOTermPtr> args;
    args.reserve(p->args.size());
    for (const auto& a : p->args) args.push_back(substitute(a, v, t));
    return pred(p->name, std::move(args));
  }
  if (const auto* c = f->get_if<FOFormula::Cmp>())
    return cmp(substitute(c->left, v, t), c->rel, substitute(c->right, v, t));
  if (f->get_if<FOFormula::Bottom>()) return f;
  if (const auto* x = f->get_if<FOFormula::And>())
    return conj(substitute_rec(x->lhs, v, t), substitute_rec(x->rhs, v, t));
  if (const auto* x = f->get_if<FOFormula::Or>())
    return disj(substitute_rec(x->lhs, v, t), substitute_rec(x->rhs, v, t));
  if (const auto* x = f->get_if<FOFormula::Implies>())
    return implies(substitute_rec(x->lhs, v, t), substitute_rec(x->rhs, v, t));
  if (const auto* x = f->get_if<FOFormula::Forall>()) {
    if (x->var == v) return f;
    return forall(x->var, substitute_rec(x->body, v, t));
  }
  const auto* x = f->get_if<FOFormula::Exists>();
  if (x->var == v) return f;
  return exists(x->var, substitute_rec(x->body, v, t));
}

}  // namespace

FOFormulaPtr substitute(const FOFormulaPtr& f, const TypedVar& v, const FOTermPtr& t) {
  if (!is_substitutable(*f, v, *t)) {
    if (v.sort == Sort::Integer && sort_of(*t) != Sort::Integer)
      throw SubstitutionError("term `" + to_string(*t) + "` is not of sort int, required for `" +
                              v.name + "`");
    throw SubstitutionError("substituting `" + to_string(*t) + "` for `" + v.name +
                            "` would capture a variable");
  }
  return substitute_rec(f, v, t);
}

namespace {

void collect_names(const FOFormula& f, std::set<std::string>* out) {
  std::vector<TypedVar> none;
  std::set<TypedVar> vars;
  collect_formula_vars(f, none, &vars);
  for (const auto& v : vars) out->insert(v.name);
  // Bound names matter too: scan quantifiers.
  std::function<void(const FOFormula&)> scan = [&](const FOFormula& g) {
    if (const auto* x = g.get_if<FOFormula::And>()) {
      scan(*x->lhs);
      scan(*x->rhs);
    } else if (const auto* x = g.get_if<FOFormula::Or>()) {
      scan(*x->lhs);
      scan(*x->rhs);
    } else if (const auto* x = g.get_if<FOFormula::Implies>()) {
      scan(*x->lhs);
      scan(*x->rhs);
    } else if (const auto* x = g.get_if<FOFormula::Forall>()) {
      out->insert(x->var.name);
      scan(*x->body);
    } else if (const auto* x = g.get_if<FOFormula::Exists>()) {
      out->insert(x->var.name);
      scan(*x->body);
    }
  };
  scan(f);
}

}  // namespace

FOFormulaPtr substitute_simultaneous(const FOFormulaPtr& f,
                                     const std::vector<std::pair<TypedVar, FOTermPtr>>& subs) {
  std::set<std::string> used;
  collect_names(*f, &used);
  for (const auto& [v, t] : subs) {
    used.insert(v.name);
    for (const auto& w : free_vars(*t)) used.insert(w.name);
  }
  int next = 0;
  auto fresh = [&]() {
    std::string name;
    do {
      name = "_v" + std::to_string(next++);
    } while (used.count(name));
    used.insert(name);
    return name;
  };

  FOFormulaPtr out = f;
  std::vector<std::pair<TypedVar, FOTermPtr>> second_pass;
  for (const auto& [v, t] : subs) {
    TypedVar middle{fresh(), v.sort};
    out = substitute(out, v, term_var(middle));
    second_pass.emplace_back(middle, t);
  }
  for (const auto& [v, t] : second_pass) out = substitute(out, v, t);
  return out;
}

FOFormulaPtr universal_closure(const FOFormulaPtr& f) {
  std::set<TypedVar> vars = free_vars(*f);
  FOFormulaPtr out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = forall(*it, out);
  return out;
}

Precomputed eval_ground_term(const FOTerm& t) {
  if (const auto* c = t.get_if<FOTerm::Const>()) return c->value;
  if (const auto* v = t.get_if<FOTerm::Var>())
    throw Error("cannot evaluate open term: variable `" + v->var.name + "`");
  const auto* a = t.get_if<FOTerm::Arith>();
  Int lhs = eval_ground_term(*a->lhs).value();
  Int rhs = eval_ground_term(*a->rhs).value();
  switch (a->op) {
    case ArithOp::Add: return Precomputed::numeral(lhs + rhs);
    case ArithOp::Sub: return Precomputed::numeral(lhs - rhs);
    case ArithOp::Mul: return Precomputed::numeral(lhs * rhs);
  }
  throw Error("unreachable");
}

std::pair<std::vector<TypedVar>, FOFormulaPtr> strip_forall_prefix(const FOFormulaPtr& f) {
  std::vector<TypedVar> prefix;
  FOFormulaPtr body = f;
  while (const auto* x = body->get_if<FOFormula::Forall>()) {
    prefix.push_back(x->var);
    body = x->body;
  }
  return {std::move(prefix), std::move(body)};
}

bool alpha_equal_modulo_prefix(const FOFormulaPtr& a, const FOFormulaPtr& b) {
  if (alpha_equal(*a, *b)) return true;
  auto [pa, body_a] = strip_forall_prefix(a);
  auto [pb, body_b] = strip_forall_prefix(b);
  if (pa.size() != pb.size() || pa.size() > 6) return false;

  std::vector<size_t> idx(pa.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end());
  do {
    FOFormulaPtr rebuilt = body_a;
    for (size_t i = idx.size(); i-- > 0;) rebuilt = forall(pa[idx[i]], rebuilt);
    if (alpha_equal(*rebuilt, *b)) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace hta::fo
