#include "hta/mg/parser.hpp"

#include <utility>

#include "hta/error.hpp"
#include "lexer.hpp"

namespace hta::mg {

namespace {

using detail::Tok;
using detail::Token;

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(detail::tokenize(text)) {}

  Program parse_program() {
    std::vector<Rule> rules;
    while (!at(Tok::End)) rules.push_back(parse_rule());
    return Program(std::move(rules));
  }

  PTermPtr parse_single_term() {
    PTermPtr t = parse_term();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  Token take() { return toks_[pos_++]; }

  Token expect(Tok k) {
    if (!at(k)) fail({k});
    return take();
  }

  [[noreturn]] void fail(std::vector<Tok> expected) {
    std::vector<std::string> names;
    names.reserve(expected.size());
    for (Tok k : expected) names.emplace_back(detail::tok_str(k));
    throw ParseError(std::string("unexpected ") + detail::tok_str(cur().kind),
                     cur().line, cur().column, std::move(names));
  }

  Rule parse_rule() {
    Rule rule;
    if (at(Tok::If)) {
      // constraint
      take();
      rule.head.kind = HeadKind::Empty;
      if (!at(Tok::Dot)) rule.body = parse_body();
      expect(Tok::Dot);
      return rule;
    }
    if (at(Tok::LBrace)) {
      take();
      rule.head.kind = HeadKind::Choice;
      rule.head.atom = parse_atom();
      expect(Tok::RBrace);
    } else {
      rule.head.kind = HeadKind::Basic;
      rule.head.atom = parse_atom();
    }
    if (at(Tok::If)) {
      take();
      rule.body = parse_body();
    }
    expect(Tok::Dot);
    return rule;
  }

  std::vector<BodyElem> parse_body() {
    std::vector<BodyElem> body;
    body.push_back(parse_body_elem());
    while (at(Tok::Comma)) {
      take();
      body.push_back(parse_body_elem());
    }
    return body;
  }

  BodyElem parse_body_elem() {
    if (at(Tok::KwNot)) {
      take();
      int negations = 1;
      if (at(Tok::KwNot)) {
        take();
        negations = 2;
      }
      return Literal{parse_atom(), negations};
    }
    // An identifier directly followed by `(` can only start an atom.
    if (at(Tok::Ident) && toks_[pos_ + 1].kind == Tok::LParen)
      return Literal{parse_atom(), 0};

    const Token& start = cur();
    PTermPtr t = parse_term();
    if (auto rel = try_rel()) {
      PTermPtr rhs = parse_term();
      return Comparison{std::move(t), *rel, std::move(rhs)};
    }
    if (const auto* s = t->get_if<PTerm::Symbol>()) return Literal{Atom{s->name, {}}, 0};
    throw ParseError("`" + to_string(*t) + "` is not an atom or comparison",
                     start.line, start.column);
  }

  std::optional<Rel> try_rel() {
    switch (cur().kind) {
      case Tok::Eq: take(); return Rel::Eq;
      case Tok::Ne: take(); return Rel::Ne;
      case Tok::Lt: take(); return Rel::Lt;
      case Tok::Gt: take(); return Rel::Gt;
      case Tok::Le: take(); return Rel::Le;
      case Tok::Ge: take(); return Rel::Ge;
      default: return std::nullopt;
    }
  }

  Atom parse_atom() {
    Token name = expect(Tok::Ident);
    Atom atom;
    atom.predicate = name.text;
    if (at(Tok::LParen)) {
      take();
      atom.args.push_back(parse_term());
      while (at(Tok::Comma)) {
        take();
        atom.args.push_back(parse_term());
      }
      expect(Tok::RParen);
    }
    return atom;
  }

  // `..` binds loosest, then `+ -`, then `* / \`; all left-associative.
  PTermPtr parse_term() { return parse_interval(); }

  PTermPtr parse_interval() {
    PTermPtr t = parse_additive();
    while (at(Tok::DotDot)) {
      take();
      t = binop(TermOp::Interval, std::move(t), parse_additive());
    }
    return t;
  }

  PTermPtr parse_additive() {
    PTermPtr t = parse_multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      TermOp op = take().kind == Tok::Plus ? TermOp::Add : TermOp::Sub;
      t = binop(op, std::move(t), parse_multiplicative());
    }
    return t;
  }

  PTermPtr parse_multiplicative() {
    PTermPtr t = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Backslash)) {
      Tok k = take().kind;
      TermOp op = k == Tok::Star ? TermOp::Mul : k == Tok::Slash ? TermOp::Div : TermOp::Mod;
      t = binop(op, std::move(t), parse_unary());
    }
    return t;
  }

  PTermPtr parse_unary() {
    if (at(Tok::Minus)) {
      take();
      PTermPtr t = parse_unary();
      if (const auto* n = t->get_if<PTerm::Numeral>()) return num(-n->value);
      return binop(TermOp::Sub, num(0), std::move(t));
    }
    return parse_primary();
  }

  PTermPtr parse_primary() {
    switch (cur().kind) {
      case Tok::Number: return num(take().number);
      case Tok::Ident: return sym(take().text);
      case Tok::UpName: return var(take().text);
      case Tok::HashInf: take(); return inf();
      case Tok::HashSup: take(); return sup();
      case Tok::LParen: {
        take();
        PTermPtr t = parse_term();
        expect(Tok::RParen);
        return t;
      }
      default:
        fail({Tok::Number, Tok::Ident, Tok::UpName, Tok::HashInf, Tok::HashSup, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse_program(); }

PTermPtr parse_term_text(std::string_view text) { return Parser(text).parse_single_term(); }

}  // namespace hta::mg
