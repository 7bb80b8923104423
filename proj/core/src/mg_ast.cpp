#include "hta/mg/ast.hpp"

#include "hta/error.hpp"

namespace hta::mg {

const char* term_op_str(TermOp op) {
  switch (op) {
    case TermOp::Add: return "+";
    case TermOp::Sub: return "-";
    case TermOp::Mul: return "*";
    case TermOp::Div: return "/";
    case TermOp::Mod: return "\\";
    case TermOp::Interval: return "..";
  }
  return "?";
}

PTermPtr num(Int value) { return std::make_shared<PTerm>(PTerm::Numeral{std::move(value)}); }
PTermPtr num(long long value) { return num(Int(value)); }
PTermPtr sym(std::string name) { return std::make_shared<PTerm>(PTerm::Symbol{std::move(name)}); }
PTermPtr inf() { return std::make_shared<PTerm>(PTerm::Inf{}); }
PTermPtr sup() { return std::make_shared<PTerm>(PTerm::Sup{}); }
PTermPtr var(std::string name) { return std::make_shared<PTerm>(PTerm::Var{std::move(name)}); }

PTermPtr binop(TermOp op, PTermPtr lhs, PTermPtr rhs) {
  return std::make_shared<PTerm>(PTerm::BinOp{op, std::move(lhs), std::move(rhs)});
}

bool equal(const PTerm& a, const PTerm& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* n = a.get_if<PTerm::Numeral>()) return n->value == b.get_if<PTerm::Numeral>()->value;
  if (const auto* s = a.get_if<PTerm::Symbol>()) return s->name == b.get_if<PTerm::Symbol>()->name;
  if (const auto* v = a.get_if<PTerm::Var>()) return v->name == b.get_if<PTerm::Var>()->name;
  if (const auto* o = a.get_if<PTerm::BinOp>()) {
    const auto* p = b.get_if<PTerm::BinOp>();
    return o->op == p->op && equal(*o->lhs, *p->lhs) && equal(*o->rhs, *p->rhs);
  }
  return true;  // Inf == Inf, Sup == Sup
}

bool is_precomputed(const PTerm& t) {
  return !t.get_if<PTerm::Var>() && !t.get_if<PTerm::BinOp>();
}

Precomputed to_precomputed(const PTerm& t) {
  if (const auto* n = t.get_if<PTerm::Numeral>()) return Precomputed::numeral(n->value);
  if (const auto* s = t.get_if<PTerm::Symbol>()) return Precomputed::symbol(s->name);
  if (t.get_if<PTerm::Inf>()) return Precomputed::inf();
  if (t.get_if<PTerm::Sup>()) return Precomputed::sup();
  throw Error("term `" + to_string(t) + "` is not precomputed");
}

int precomputed_compare(const PTerm& a, const PTerm& b) {
  return hta::precomputed_compare(to_precomputed(a), to_precomputed(b));
}

namespace {

// Binding strength: interval < additive < multiplicative.
int op_level(TermOp op) {
  switch (op) {
    case TermOp::Interval: return 0;
    case TermOp::Add:
    case TermOp::Sub: return 1;
    default: return 2;
  }
}

void print_term(std::string& out, const PTerm& t, int min_level) {
  if (const auto* o = t.get_if<PTerm::BinOp>()) {
    int level = op_level(o->op);
    bool parens = level < min_level;
    if (parens) out += "(";
    // All operations are printed left-associated; the right operand of a
    // same-level operation keeps its parentheses.
    print_term(out, *o->lhs, level);
    out += term_op_str(o->op);
    print_term(out, *o->rhs, level + 1);
    if (parens) out += ")";
    return;
  }
  if (const auto* n = t.get_if<PTerm::Numeral>()) {
    // A negative numeral under an operation needs parentheses to re-lex.
    bool parens = n->value < 0 && min_level > 0;
    if (parens) out += "(";
    out += n->value.str();
    if (parens) out += ")";
    return;
  }
  if (const auto* s = t.get_if<PTerm::Symbol>()) {
    out += s->name;
    return;
  }
  if (const auto* v = t.get_if<PTerm::Var>()) {
    out += v->name;
    return;
  }
  out += t.get_if<PTerm::Inf>() ? "#inf" : "#sup";
}

}  // namespace

std::string to_string(const PTerm& t) {
  std::string out;
  print_term(out, t, 0);
  return out;
}

bool equal(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!equal(*a.args[i], *b.args[i])) return false;
  return true;
}

bool equal(const Literal& a, const Literal& b) {
  return a.negations == b.negations && equal(a.atom, b.atom);
}

bool equal(const Comparison& a, const Comparison& b) {
  return a.rel == b.rel && equal(*a.left, *b.left) && equal(*a.right, *b.right);
}

bool equal(const BodyElem& a, const BodyElem& b) {
  if (a.index() != b.index()) return false;
  if (const auto* l = std::get_if<Literal>(&a)) return equal(*l, std::get<Literal>(b));
  return equal(std::get<Comparison>(a), std::get<Comparison>(b));
}

bool equal(const Rule& a, const Rule& b) {
  if (a.head.kind != b.head.kind) return false;
  if (a.head.atom.has_value() != b.head.atom.has_value()) return false;
  if (a.head.atom && !equal(*a.head.atom, *b.head.atom)) return false;
  if (a.body.size() != b.body.size()) return false;
  for (size_t i = 0; i < a.body.size(); ++i)
    if (!equal(a.body[i], b.body[i])) return false;
  return true;
}

std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(*a.args[i]);
    }
    out += ")";
  }
  return out;
}

std::string to_string(const Literal& l) {
  std::string out;
  for (int i = 0; i < l.negations; ++i) out += "not ";
  return out + to_string(l.atom);
}

std::string to_string(const Comparison& c) {
  return to_string(*c.left) + " " + rel_str(c.rel) + " " + to_string(*c.right);
}

std::string to_string(const Rule& r) {
  std::string out;
  switch (r.head.kind) {
    case HeadKind::Basic: out += to_string(*r.head.atom); break;
    case HeadKind::Choice: out += "{" + to_string(*r.head.atom) + "}"; break;
    case HeadKind::Empty: break;
  }
  if (!r.body.empty()) {
    out += (r.head.kind == HeadKind::Empty) ? ":- " : " :- ";
    for (size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) out += ", ";
      if (const auto* l = std::get_if<Literal>(&r.body[i]))
        out += to_string(*l);
      else
        out += to_string(std::get<Comparison>(r.body[i]));
    }
  } else if (r.head.kind == HeadKind::Empty) {
    out += ":-";
  }
  out += ".";
  return out;
}

Program::Program(std::vector<Rule> rules) {
  for (auto& r : rules) {
    bool dup = false;
    for (const auto& kept : rules_)
      if (equal(kept, r)) {
        dup = true;
        break;
      }
    if (!dup) rules_.push_back(std::move(r));
  }
}

bool equal(const Program& a, const Program& b) {
  // Rules are already duplicate-free, so mutual inclusion is enough.
  auto included = [](const Program& x, const Program& y) {
    for (const auto& r : x.rules()) {
      bool found = false;
      for (const auto& s : y.rules())
        if (equal(r, s)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return included(a, b) && included(b, a);
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) {
    out += to_string(r);
    out += "\n";
  }
  return out;
}

}  // namespace hta::mg
