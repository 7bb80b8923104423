#include "hta/ground/ground.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "hta/error.hpp"
#include "hta/fo/ops.hpp"

namespace hta::ground {

std::vector<Precomputed> Domain::numerals() const {
  std::vector<Precomputed> out;
  for (Int n = lo; n <= hi; ++n) out.push_back(Precomputed::numeral(n));
  return out;
}

std::vector<Precomputed> Domain::pool() const {
  std::vector<Precomputed> out;
  if (include_inf_sup) out.push_back(Precomputed::inf());
  for (auto& n : numerals()) out.push_back(std::move(n));
  std::vector<std::string> consts = symbolic_consts;
  std::sort(consts.begin(), consts.end());
  consts.erase(std::unique(consts.begin(), consts.end()), consts.end());
  for (auto& c : consts) out.push_back(Precomputed::symbol(std::move(c)));
  if (include_inf_sup) out.push_back(Precomputed::sup());
  return out;
}

bool Domain::contains(const Precomputed& value) const {
  switch (value.kind()) {
    case Precomputed::Kind::Inf:
    case Precomputed::Kind::Sup:
      return include_inf_sup;
    case Precomputed::Kind::Numeral:
      return lo <= value.value() && value.value() <= hi;
    case Precomputed::Kind::Symbol:
      for (const auto& c : symbolic_consts)
        if (c == value.name()) return true;
      return false;
  }
  return false;
}

std::string Domain::str() const {
  std::string s = "ints " + lo.str() + ".." + hi.str();
  if (!symbolic_consts.empty()) {
    s += ", consts ";
    for (size_t i = 0; i < symbolic_consts.size(); ++i) {
      if (i > 0) s += ",";
      s += symbolic_consts[i];
    }
  }
  if (include_inf_sup) s += ", #inf/#sup";
  return s;
}

namespace {

struct DomainScan {
  bool any_numeral = false;
  Int min = 0, max = 0;
  std::set<std::string> consts;
  bool inf_sup = false;

  void term(const mg::PTerm& t) {
    if (const auto* n = t.get_if<mg::PTerm::Numeral>()) {
      if (!any_numeral) {
        min = max = n->value;
        any_numeral = true;
      } else {
        if (n->value < min) min = n->value;
        if (n->value > max) max = n->value;
      }
      return;
    }
    if (const auto* s = t.get_if<mg::PTerm::Symbol>()) {
      consts.insert(s->name);
      return;
    }
    if (t.get_if<mg::PTerm::Inf>() || t.get_if<mg::PTerm::Sup>()) {
      inf_sup = true;
      return;
    }
    if (const auto* o = t.get_if<mg::PTerm::BinOp>()) {
      term(*o->lhs);
      term(*o->rhs);
    }
  }
};

}  // namespace

Domain default_domain(const std::vector<const mg::Program*>& programs) {
  DomainScan scan;
  for (const mg::Program* p : programs) {
    for (const auto& r : p->rules()) {
      if (r.head.atom)
        for (const auto& a : r.head.atom->args) scan.term(*a);
      for (const auto& elem : r.body) {
        if (const auto* lit = std::get_if<mg::Literal>(&elem)) {
          for (const auto& a : lit->atom.args) scan.term(*a);
        } else {
          const auto& c = std::get<mg::Comparison>(elem);
          scan.term(*c.left);
          scan.term(*c.right);
        }
      }
    }
  }
  Domain d;
  if (scan.any_numeral) {
    d.lo = scan.min - 2;
    d.hi = scan.max + 2;
  } else {
    d.lo = 0;
    d.hi = 1;
  }
  d.symbolic_consts.assign(scan.consts.begin(), scan.consts.end());
  d.include_inf_sup = scan.inf_sup;
  return d;
}

std::string GroundAtom::str() const {
  std::string s = pred;
  if (!args.empty()) {
    s += "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i > 0) s += ",";
      s += args[i].str();
    }
    s += ")";
  }
  return s;
}

bool operator==(const GroundAtom& a, const GroundAtom& b) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!(a.args[i] == b.args[i])) return false;
  return true;
}

bool operator<(const GroundAtom& a, const GroundAtom& b) {
  if (a.pred != b.pred) return a.pred < b.pred;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size();
  for (size_t i = 0; i < a.args.size(); ++i) {
    int c = precomputed_compare(a.args[i], b.args[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

GFPtr gatom(GroundAtom a) {
  return std::make_shared<GroundFormula>(GroundFormula::Atom{std::move(a)});
}
GFPtr gtrue() { return std::make_shared<GroundFormula>(GroundFormula::True{}); }
GFPtr gfalse() { return std::make_shared<GroundFormula>(GroundFormula::False{}); }
GFPtr gand(std::vector<GFPtr> members) {
  return std::make_shared<GroundFormula>(GroundFormula::And{std::move(members)});
}
GFPtr gor(std::vector<GFPtr> members) {
  return std::make_shared<GroundFormula>(GroundFormula::Or{std::move(members)});
}
GFPtr gimplies(GFPtr lhs, GFPtr rhs) {
  return std::make_shared<GroundFormula>(GroundFormula::Implies{std::move(lhs), std::move(rhs)});
}
GFPtr gneg(GFPtr f) { return gimplies(std::move(f), gfalse()); }

bool equal(const GroundFormula& a, const GroundFormula& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.get_if<GroundFormula::Atom>())
    return x->atom == b.get_if<GroundFormula::Atom>()->atom;
  if (a.get_if<GroundFormula::True>() || a.get_if<GroundFormula::False>()) return true;
  if (const auto* x = a.get_if<GroundFormula::And>()) {
    const auto* y = b.get_if<GroundFormula::And>();
    if (x->members.size() != y->members.size()) return false;
    for (size_t i = 0; i < x->members.size(); ++i)
      if (!equal(*x->members[i], *y->members[i])) return false;
    return true;
  }
  if (const auto* x = a.get_if<GroundFormula::Or>()) {
    const auto* y = b.get_if<GroundFormula::Or>();
    if (x->members.size() != y->members.size()) return false;
    for (size_t i = 0; i < x->members.size(); ++i)
      if (!equal(*x->members[i], *y->members[i])) return false;
    return true;
  }
  const auto* x = a.get_if<GroundFormula::Implies>();
  const auto* y = b.get_if<GroundFormula::Implies>();
  return equal(*x->lhs, *y->lhs) && equal(*x->rhs, *y->rhs);
}

std::string to_string(const GroundFormula& f) {
  if (const auto* a = f.get_if<GroundFormula::Atom>()) return a->atom.str();
  if (f.get_if<GroundFormula::True>()) return "#true";
  if (f.get_if<GroundFormula::False>()) return "#false";
  if (const auto* x = f.get_if<GroundFormula::And>()) {
    if (x->members.empty()) return "#true";
    std::string s = "(";
    for (size_t i = 0; i < x->members.size(); ++i) {
      if (i > 0) s += " & ";
      s += to_string(*x->members[i]);
    }
    return s + ")";
  }
  if (const auto* x = f.get_if<GroundFormula::Or>()) {
    if (x->members.empty()) return "#false";
    std::string s = "(";
    for (size_t i = 0; i < x->members.size(); ++i) {
      if (i > 0) s += " | ";
      s += to_string(*x->members[i]);
    }
    return s + ")";
  }
  const auto* x = f.get_if<GroundFormula::Implies>();
  return "(" + to_string(*x->lhs) + " -> " + to_string(*x->rhs) + ")";
}

namespace {

void collect_atoms(const GroundFormula& f, AtomSet* out) {
  if (const auto* a = f.get_if<GroundFormula::Atom>()) {
    out->insert(a->atom);
    return;
  }
  if (const auto* x = f.get_if<GroundFormula::And>()) {
    for (const auto& m : x->members) collect_atoms(*m, out);
    return;
  }
  if (const auto* x = f.get_if<GroundFormula::Or>()) {
    for (const auto& m : x->members) collect_atoms(*m, out);
    return;
  }
  if (const auto* x = f.get_if<GroundFormula::Implies>()) {
    collect_atoms(*x->lhs, out);
    collect_atoms(*x->rhs, out);
  }
}

bool mentions_atom_outside(const GroundFormula& f, const Domain& d) {
  AtomSet atoms;
  collect_atoms(f, &atoms);
  for (const auto& a : atoms)
    for (const auto& arg : a.args)
      if (!d.contains(arg)) return true;
  return false;
}

using Env = std::map<fo::TypedVar, Precomputed>;

Precomputed eval_term(const fo::FOTerm& t, const Domain& d, const Env& env) {
  if (const auto* c = t.get_if<fo::FOTerm::Const>()) {
    if (!d.contains(c->value))
      throw DomainError("object constant `" + c->value.str() + "` is outside the domain (" +
                        d.str() + ")");
    return c->value;
  }
  if (const auto* v = t.get_if<fo::FOTerm::Var>()) {
    auto it = env.find(v->var);
    if (it == env.end())
      throw DomainError("formula is not closed: free variable `" + v->var.name + "`");
    return it->second;
  }
  const auto* a = t.get_if<fo::FOTerm::Arith>();
  Int lhs = eval_term(*a->lhs, d, env).value();
  Int rhs = eval_term(*a->rhs, d, env).value();
  switch (a->op) {
    case fo::ArithOp::Add: return Precomputed::numeral(lhs + rhs);
    case fo::ArithOp::Sub: return Precomputed::numeral(lhs - rhs);
    case fo::ArithOp::Mul: return Precomputed::numeral(lhs * rhs);
  }
  throw Error("unreachable");
}

GFPtr expand(const fo::FOFormula& f, const Domain& d, Env& env) {
  if (const auto* p = f.get_if<fo::FOFormula::Pred>()) {
    GroundAtom atom;
    atom.pred = p->name;
    for (const auto& arg : p->args) atom.args.push_back(eval_term(*arg, d, env));
    return gatom(std::move(atom));
  }
  if (const auto* c = f.get_if<fo::FOFormula::Cmp>()) {
    return eval_comparison(eval_term(*c->left, d, env), c->rel, eval_term(*c->right, d, env))
               ? gtrue()
               : gfalse();
  }
  if (f.get_if<fo::FOFormula::Bottom>()) return gfalse();
  if (const auto* x = f.get_if<fo::FOFormula::And>())
    return gand({expand(*x->lhs, d, env), expand(*x->rhs, d, env)});
  if (const auto* x = f.get_if<fo::FOFormula::Or>())
    return gor({expand(*x->lhs, d, env), expand(*x->rhs, d, env)});
  if (const auto* x = f.get_if<fo::FOFormula::Implies>())
    return gimplies(expand(*x->lhs, d, env), expand(*x->rhs, d, env));

  const fo::TypedVar* var = nullptr;
  const fo::FOFormula* body = nullptr;
  bool universal = false;
  if (const auto* fa = f.get_if<fo::FOFormula::Forall>()) {
    var = &fa->var;
    body = fa->body.get();
    universal = true;
  } else {
    const auto* ex = f.get_if<fo::FOFormula::Exists>();
    var = &ex->var;
    body = ex->body.get();
  }
  std::vector<Precomputed> range =
      var->sort == fo::Sort::Integer ? d.numerals() : d.pool();
  std::vector<GFPtr> members;
  for (const auto& value : range) {
    std::optional<Precomputed> saved;
    if (auto it = env.find(*var); it != env.end()) saved = it->second;
    env.insert_or_assign(*var, value);
    GFPtr instance = expand(*body, d, env);
    if (saved)
      env.insert_or_assign(*var, *saved);
    else
      env.erase(*var);
    // An instance that steps outside the pool is not part of the finite
    // restriction.
    if (mentions_atom_outside(*instance, d)) continue;
    members.push_back(std::move(instance));
  }
  return universal ? gand(std::move(members)) : gor(std::move(members));
}

}  // namespace

GFPtr ground_raw(const fo::FOFormula& f, const Domain& d) {
  Env env;
  return expand(f, d, env);
}

GFPtr simplify(const GFPtr& f) {
  if (const auto* x = f->get_if<GroundFormula::And>()) {
    std::vector<GFPtr> members;
    for (const auto& m : x->members) {
      GFPtr s = simplify(m);
      if (s->get_if<GroundFormula::True>()) continue;
      if (s->get_if<GroundFormula::False>()) return gfalse();
      if (const auto* nested = s->get_if<GroundFormula::And>()) {
        for (const auto& n : nested->members) members.push_back(n);
        continue;
      }
      members.push_back(std::move(s));
    }
    if (members.empty()) return gtrue();
    if (members.size() == 1) return members.front();
    return gand(std::move(members));
  }
  if (const auto* x = f->get_if<GroundFormula::Or>()) {
    std::vector<GFPtr> members;
    for (const auto& m : x->members) {
      GFPtr s = simplify(m);
      if (s->get_if<GroundFormula::False>()) continue;
      if (s->get_if<GroundFormula::True>()) return gtrue();
      if (const auto* nested = s->get_if<GroundFormula::Or>()) {
        for (const auto& n : nested->members) members.push_back(n);
        continue;
      }
      members.push_back(std::move(s));
    }
    if (members.empty()) return gfalse();
    if (members.size() == 1) return members.front();
    return gor(std::move(members));
  }
  if (const auto* x = f->get_if<GroundFormula::Implies>()) {
    GFPtr lhs = simplify(x->lhs);
    GFPtr rhs = simplify(x->rhs);
    if (rhs->get_if<GroundFormula::True>()) return gtrue();
    if (lhs->get_if<GroundFormula::False>()) return gtrue();
    if (lhs->get_if<GroundFormula::True>()) return rhs;
    return gimplies(std::move(lhs), std::move(rhs));
  }
  return f;
}

AtomSet atoms_of(const GroundFormula& f) {
  AtomSet out;
  collect_atoms(f, &out);
  return out;
}

GFPtr ground(const fo::FOFormula& f, const Domain& d) { return simplify(ground_raw(f, d)); }

GFPtr ground_all(const std::vector<fo::FOFormulaPtr>& sentences, const Domain& d) {
  std::vector<GFPtr> members;
  members.reserve(sentences.size());
  for (const auto& s : sentences) members.push_back(ground_raw(*s, d));
  return simplify(gand(std::move(members)));
}

}  // namespace hta::ground
