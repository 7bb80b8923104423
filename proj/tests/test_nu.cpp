#include <doctest.h>

#include <functional>

#include "hta/error.hpp"
#include "hta/fo/ops.hpp"
#include "hta/fo/text.hpp"
#include "hta/ground/ground.hpp"
#include "hta/mg/parser.hpp"
#include "hta/nu/translate.hpp"

using namespace hta;

namespace {

mg::Rule single_rule(const std::string& text) {
  mg::Program p = mg::parse_program(text);
  REQUIRE(p.rules().size() == 1);
  return p.rules().front();
}

std::vector<std::string> promoted_vars(const mg::Rule& r) {
  std::vector<std::string> out;
  for (const auto& [x, n] : nu::plan_integer_vars(r).promoted) out.push_back(x);
  return out;
}

bool translates_to(const std::string& rule, const std::string& expected) {
  return fo::alpha_equal_modulo_prefix(nu::nu_rule(single_rule(rule)),
                                       fo::parse_formula(expected));
}

// No generic-sorted term below an arithmetic operation anywhere.
bool arithmetic_is_integer_only(const fo::FOFormula& f);

bool term_ok(const fo::FOTerm& t, bool under_op) {
  if (const auto* a = t.get_if<fo::FOTerm::Arith>())
    return term_ok(*a->lhs, true) && term_ok(*a->rhs, true);
  return !under_op || sort_of(t) == fo::Sort::Integer;
}

bool arithmetic_is_integer_only(const fo::FOFormula& f) {
  using F = fo::FOFormula;
  if (const auto* p = f.get_if<F::Pred>()) {
    for (const auto& a : p->args)
      if (!term_ok(*a, false)) return false;
    return true;
  }
  if (const auto* c = f.get_if<F::Cmp>())
    return term_ok(*c->left, false) && term_ok(*c->right, false);
  if (f.get_if<F::Bottom>()) return true;
  if (const auto* x = f.get_if<F::And>())
    return arithmetic_is_integer_only(*x->lhs) && arithmetic_is_integer_only(*x->rhs);
  if (const auto* x = f.get_if<F::Or>())
    return arithmetic_is_integer_only(*x->lhs) && arithmetic_is_integer_only(*x->rhs);
  if (const auto* x = f.get_if<F::Implies>())
    return arithmetic_is_integer_only(*x->lhs) && arithmetic_is_integer_only(*x->rhs);
  if (const auto* x = f.get_if<F::Forall>()) return arithmetic_is_integer_only(*x->body);
  return arithmetic_is_integer_only(*f.get_if<F::Exists>()->body);
}

}  // namespace

TEST_CASE("integer-variable plans") {
  CHECK(promoted_vars(single_rule("p(X,Y) :- X = 1..2, Y = 1..2.")) ==
        std::vector<std::string>{"X", "Y"});
  CHECK(promoted_vars(single_rule("p(X,Y) :- X = Y, Y = 1..2.")) ==
        std::vector<std::string>{"Y"});
  CHECK(promoted_vars(single_rule("q(X) :- p(X).")).empty());
  CHECK(promoted_vars(single_rule("{q(X)} :- p(X+1).")) == std::vector<std::string>{"X"});
  // fresh names avoid the rule's own variables
  nu::IntVarPlan plan = nu::plan_integer_vars(single_rule("q(N1+1) :- p(N1)."));
  REQUIRE(plan.promoted.size() == 1);
  CHECK(plan.promoted.front().first == "N1");
  CHECK(plan.promoted.front().second != "N1");
  CHECK_THROWS_AS(nu::plan_integer_vars(single_rule("q :- p(1..2).")), Error);
}

TEST_CASE("p2f maps terms over the plan") {
  mg::Rule r = single_rule("q(X+Y) :- p(X), p(Y), X <= Y.");
  nu::IntVarPlan plan = nu::plan_integer_vars(r);
  REQUIRE(plan.promoted.size() == 2);
  auto t = nu::p2f(*mg::parse_term_text("X+1"), plan);
  CHECK(fo::sort_of(*t) == fo::Sort::Integer);
  CHECK(fo::to_string(*t) == plan.promoted[0].second + "+1");
  // unpromoted variables stay generic
  nu::IntVarPlan none = nu::plan_integer_vars(single_rule("q(X) :- p(X)."));
  auto x = nu::p2f(*mg::parse_term_text("X"), none);
  CHECK(fo::sort_of(*x) == fo::Sort::Generic);
  CHECK_THROWS_AS(nu::p2f(*mg::parse_term_text("1..2"), none), Error);
}

TEST_CASE("rule translations match the displayed sentences") {
  CHECK(translates_to("{q(X)} :- p(X+1).", "forall int N (p(N+1) -> q(N) | not q(N))"));
  CHECK(translates_to(":- p(X).", "forall X (p(X) -> #false)"));
  CHECK(translates_to("q(X+Y) :- p(X), p(Y), X <= Y.",
                      "forall int M int N (p(M) & p(N) & M <= N -> q(M+N))"));
  CHECK(translates_to("p(X,Y) :- X = 1..2, Y = 1..2.",
                      "forall int M int N (1 <= M <= 2 & 1 <= N <= 2 -> p(M,N))"));
  CHECK(translates_to("p(X,Y) :- X = Y, Y = 1..2.",
                      "forall X int N (X = N & 1 <= N <= 2 -> p(X,N))"));
  CHECK(translates_to("p(0).", "p(0)"));
  CHECK(translates_to("p(X) :- X+1 > 0.", "forall int N (N+1 > 0 -> p(N))"));
}

TEST_CASE("program translation keeps rule order and aggregates errors") {
  auto sentences = nu::nu_program(mg::parse_program("p(0). p(X+1) :- p(X)."));
  REQUIRE(sentences.size() == 2);
  CHECK(fo::alpha_equal(*sentences[0], *fo::parse_formula("p(0)")));
  CHECK(fo::alpha_equal(*sentences[1], *fo::parse_formula("forall int N (p(N) -> p(N+1))")));

  CHECK(nu::nu_program(mg::Program()).empty());

  try {
    nu::nu_program(mg::parse_program("p(1..X) :- q(X). r :- s(1..2). ok."));
    FAIL("expected TranslationError");
  } catch (const TranslationError& e) {
    CHECK(e.failures().size() == 2);
    CHECK(e.failures()[0].rule_index == 0);
    CHECK(e.failures()[1].rule_index == 1);
  }
}

TEST_CASE("unsupported interval heads are reported distinctly") {
  try {
    nu::nu_rule(single_rule("p(1..X) :- q(X)."));
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("unsupported head") != std::string::npos);
  }
}

TEST_CASE("grounded translations match hand-built ground formulas") {
  using namespace hta::ground;
  auto patom = [](const std::string& pred, std::vector<long long> args) {
    GroundAtom a;
    a.pred = pred;
    for (long long n : args) a.args.push_back(Precomputed::numeral(n));
    return gatom(a);
  };
  Domain d12;
  d12.lo = 1;
  d12.hi = 2;

  // independent interval assignments: all four facts
  GFPtr got = hta::ground::ground(*nu::nu_rule(single_rule("p(X,Y) :- X = 1..2, Y = 1..2.")),
                                  d12);
  GFPtr want = gand({patom("p", {1, 1}), patom("p", {1, 2}), patom("p", {2, 1}),
                     patom("p", {2, 2})});
  CHECK(equal(*got, *want));

  // aliased assignment: the diagonal only
  got = hta::ground::ground(*nu::nu_rule(single_rule("p(X,Y) :- X = Y, Y = 1..2.")), d12);
  want = gand({patom("p", {1, 1}), patom("p", {2, 2})});
  CHECK(equal(*got, *want));

  // choice rule over 0..1: the shifted instance leaves the pool and drops
  Domain d01;
  d01.lo = 0;
  d01.hi = 1;
  got = hta::ground::ground(*nu::nu_rule(single_rule("{q(X)} :- p(X+1).")), d01);
  want = gimplies(patom("p", {1}),
                  gor({patom("q", {0}), gimplies(patom("q", {0}), gfalse())}));
  CHECK(equal(*got, *want));
}

TEST_CASE("translations are closed, integer-clean and deterministic") {
  const char* rules[] = {
      "{q(X)} :- p(X+1).",
      "p(X,Y) :- X = 1..2, Y = 1..2.",
      "p(X,Y) :- X = Y, Y = 1..2.",
      "q(X+Y) :- p(X), p(Y), X <= Y.",
      "p(X) :- X+1 > 0.",
      ":- p(X), not q(X).",
      "r(X,c) :- p(X), X = 0..9, not not q(X).",
  };
  for (const char* text : rules) {
    CAPTURE(text);
    auto f = nu::nu_rule(single_rule(text));
    CHECK(fo::is_closed(*f));
    CHECK(arithmetic_is_integer_only(*f));
    CHECK(fo::alpha_equal(*f, *nu::nu_rule(single_rule(text))));
  }
}
