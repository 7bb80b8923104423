#include "hta/fo/text.hpp"

#include <optional>
#include <vector>

#include "hta/error.hpp"
#include "lexer.hpp"

namespace hta::fo {

namespace {

using detail::Tok;
using detail::Token;

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Declarations& decls)
      : toks_(detail::tokenize(text)), decls_(decls) {}

  FOFormulaPtr parse_complete_formula() {
    FOFormulaPtr f = parse_formula();
    expect(Tok::End);
    return f;
  }

  FOTermPtr parse_complete_term() {
    FOTermPtr t = parse_term();
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

  [[noreturn]] void fail(std::vector<Tok> expected, const std::string& note = {}) {
    std::vector<std::string> names;
    for (Tok k : expected) names.emplace_back(detail::tok_str(k));
    throw ParseError(std::string("unexpected ") + detail::tok_str(cur().kind) +
                         (note.empty() ? "" : "; " + note),
                     cur().line, cur().column, std::move(names));
  }

  Sort lookup_sort(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->name == name) return it->sort;
    if (auto it = decls_.find(name); it != decls_.end()) return it->second;
    return Sort::Generic;
  }

  FOFormulaPtr parse_formula() {
    FOFormulaPtr lhs = parse_disjunction();
    if (at(Tok::Arrow)) {
      take();
      return implies(std::move(lhs), parse_formula());  // right-associative
    }
    if (at(Tok::Iff)) {
      take();
      return iff(std::move(lhs), parse_disjunction());
    }
    return lhs;
  }

  // & and | are right-associative, matching the right-associated shape the
  // Hosoi recognizer expects.
  FOFormulaPtr parse_disjunction() {
    FOFormulaPtr f = parse_conjunction();
    if (at(Tok::Bar)) {
      take();
      return disj(std::move(f), parse_disjunction());
    }
    return f;
  }

  FOFormulaPtr parse_conjunction() {
    FOFormulaPtr f = parse_unary();
    if (at(Tok::Amp)) {
      take();
      return conj(std::move(f), parse_conjunction());
    }
    return f;
  }

  FOFormulaPtr parse_unary() {
    if (at(Tok::KwNot)) {
      take();
      return neg(parse_unary());
    }
    if (at(Tok::KwForall) || at(Tok::KwExists)) return parse_quantifier();
    return parse_primary();
  }

  FOFormulaPtr parse_quantifier() {
    bool universal = take().kind == Tok::KwForall;
    std::vector<TypedVar> vars;
    do {
      Sort sort = Sort::Generic;
      if (at(Tok::KwInt)) {
        take();
        sort = Sort::Integer;
      }
      Token name = expect(Tok::UpName);
      vars.push_back({name.text, sort});
    } while (at(Tok::UpName) || at(Tok::KwInt));
    expect(Tok::LParen);
    for (const auto& v : vars) scopes_.push_back(v);
    FOFormulaPtr body = parse_formula();
    scopes_.resize(scopes_.size() - vars.size());
    expect(Tok::RParen);
    for (size_t i = vars.size(); i-- > 0;)
      body = universal ? forall(vars[i], std::move(body)) : exists(vars[i], std::move(body));
    return body;
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

  FOFormulaPtr parse_primary() {
    if (at(Tok::HashFalse)) {
      take();
      return bottom();
    }
    if (at(Tok::Ident)) {
      // A lowercase name followed by `(` is always an atom; otherwise it is
      // an atom unless a comparison symbol follows.
      if (toks_[pos_ + 1].kind != Tok::LParen) {
        bool comparison = false;
        switch (toks_[pos_ + 1].kind) {
          case Tok::Eq:
          case Tok::Ne:
          case Tok::Lt:
          case Tok::Gt:
          case Tok::Le:
          case Tok::Ge: comparison = true; break;
          default: break;
        }
        if (!comparison) return pred(take().text);
      } else {
        return parse_pred_atom();
      }
    }
    if (at(Tok::LParen)) {
      // Could open a parenthesized term of a comparison or a parenthesized
      // formula; try the term reading first and roll back on failure.
      size_t save = pos_;
      try {
        FOTermPtr t = parse_term();
        if (rel_ahead()) return parse_comparison_chain(std::move(t));
      } catch (const ParseError&) {
        // fall through to the formula reading
      }
      pos_ = save;
      take();
      FOFormulaPtr f = parse_formula();
      expect(Tok::RParen);
      return f;
    }
    FOTermPtr t = parse_term();
    if (!rel_ahead())
      fail({Tok::Eq, Tok::Ne, Tok::Lt, Tok::Gt, Tok::Le, Tok::Ge},
           "`" + to_string(*t) + "` is a term, not a formula");
    return parse_comparison_chain(std::move(t));
  }

  bool rel_ahead() const {
    switch (cur().kind) {
      case Tok::Eq:
      case Tok::Ne:
      case Tok::Lt:
      case Tok::Gt:
      case Tok::Le:
      case Tok::Ge: return true;
      default: return false;
    }
  }

  // t1 r1 t2 r2 t3 ...  expands left-to-right into a conjunction (folded
  // to the right like `&`).
  FOFormulaPtr parse_comparison_chain(FOTermPtr first) {
    std::vector<FOFormulaPtr> links;
    FOTermPtr lhs = std::move(first);
    while (rel_ahead()) {
      Rel rel = *try_rel();
      FOTermPtr rhs = parse_term();
      links.push_back(cmp(std::move(lhs), rel, rhs));
      lhs = std::move(rhs);
    }
    FOFormulaPtr f = links.back();
    for (size_t i = links.size() - 1; i-- > 0;) f = conj(links[i], std::move(f));
    return f;
  }

  FOFormulaPtr parse_pred_atom() {
    Token name = expect(Tok::Ident);
    std::vector<FOTermPtr> args;
    expect(Tok::LParen);
    args.push_back(parse_term());
    while (at(Tok::Comma)) {
      take();
      args.push_back(parse_term());
    }
    expect(Tok::RParen);
    return pred(name.text, std::move(args));
  }

  FOTermPtr parse_term() { return parse_additive(); }

  FOTermPtr parse_additive() {
    FOTermPtr t = parse_multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = take();
      FOTermPtr rhs = parse_multiplicative();
      t = checked_arith(op.kind == Tok::Plus ? ArithOp::Add : ArithOp::Sub, std::move(t),
                        std::move(rhs), op);
    }
    return t;
  }

  FOTermPtr parse_multiplicative() {
    FOTermPtr t = parse_term_unary();
    while (at(Tok::Star)) {
      Token op = take();
      t = checked_arith(ArithOp::Mul, std::move(t), parse_term_unary(), op);
    }
    return t;
  }

  FOTermPtr parse_term_unary() {
    if (at(Tok::Minus)) {
      Token op = take();
      FOTermPtr t = parse_term_unary();
      if (const auto* c = t->get_if<FOTerm::Const>(); c && c->value.is_numeral())
        return numeral(-c->value.value());
      return checked_arith(ArithOp::Sub, numeral(0), std::move(t), op);
    }
    return parse_term_primary();
  }

  FOTermPtr parse_term_primary() {
    switch (cur().kind) {
      case Tok::Number: return numeral(take().number);
      case Tok::Ident: return obj_const(Precomputed::symbol(take().text));
      case Tok::HashInf: take(); return obj_const(Precomputed::inf());
      case Tok::HashSup: take(); return obj_const(Precomputed::sup());
      case Tok::UpName: {
        Token name = take();
        return term_var({name.text, lookup_sort(name.text)});
      }
      case Tok::LParen: {
        take();
        FOTermPtr t = parse_term();
        expect(Tok::RParen);
        return t;
      }
      default:
        fail({Tok::Number, Tok::Ident, Tok::UpName, Tok::HashInf, Tok::HashSup, Tok::LParen});
    }
  }

  FOTermPtr checked_arith(ArithOp op, FOTermPtr lhs, FOTermPtr rhs, const Token& where) {
    auto check = [&](const FOTermPtr& t) {
      if (sort_of(*t) == Sort::Integer) return;
      std::string what = to_string(*t);
      if (t->get_if<FOTerm::Var>())
        throw ParseError("variable `" + what + "` has sort generic and cannot appear in " +
                             "arithmetic; declare or quantify it as int",
                         where.line, where.column);
      throw ParseError("`" + what + "` is not an integer term", where.line, where.column);
    };
    check(lhs);
    check(rhs);
    return arith(op, std::move(lhs), std::move(rhs));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Declarations& decls_;
  std::vector<TypedVar> scopes_;
};

}  // namespace

FOFormulaPtr parse_formula(std::string_view text, const Declarations& decls) {
  return FormulaParser(text, decls).parse_complete_formula();
}

FOTermPtr parse_fo_term(std::string_view text, const Declarations& decls) {
  return FormulaParser(text, decls).parse_complete_term();
}

}  // namespace hta::fo
