#include <doctest.h>

#include <random>

#include "hta/error.hpp"
#include "hta/fo/text.hpp"
#include "hta/ground/se.hpp"
#include "hta/kernel/axioms.hpp"
#include "hta/mg/parser.hpp"
#include "hta/nu/translate.hpp"

using namespace hta;
using namespace hta::ground;

namespace {

Domain ints(long long lo, long long hi, std::vector<std::string> consts = {},
            bool inf_sup = false) {
  Domain d;
  d.lo = lo;
  d.hi = hi;
  d.symbolic_consts = std::move(consts);
  d.include_inf_sup = inf_sup;
  return d;
}

GroundAtom atom(const std::string& pred, std::vector<long long> args = {}) {
  GroundAtom a;
  a.pred = pred;
  for (long long n : args) a.args.push_back(Precomputed::numeral(n));
  return a;
}

GFPtr ground_text(const std::string& formula, const Domain& d,
                  const fo::Declarations& decls = {}) {
  return hta::ground::ground(*fo::parse_formula(formula, decls), d);
}

// Random ground formulas over a fixed atom alphabet.
GFPtr random_ground(std::mt19937& rng, int depth, int natoms) {
  int pick = std::uniform_int_distribution<int>(0, depth == 0 ? 2 : 6)(rng);
  switch (pick) {
    case 0: return gatom(atom("a" + std::to_string(
                 std::uniform_int_distribution<int>(0, natoms - 1)(rng))));
    case 1: return gtrue();
    case 2: return gfalse();
    case 3:
    case 4: {
      std::vector<GFPtr> members;
      int width = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < width; ++i) members.push_back(random_ground(rng, depth - 1, natoms));
      return pick == 3 ? gand(std::move(members)) : gor(std::move(members));
    }
    default:
      return gimplies(random_ground(rng, depth - 1, natoms),
                      random_ground(rng, depth - 1, natoms));
  }
}

// Negative by construction: implications restricted to negative consequents.
GFPtr random_negative(std::mt19937& rng, int depth, int natoms) {
  int pick = std::uniform_int_distribution<int>(0, depth == 0 ? 1 : 4)(rng);
  switch (pick) {
    case 0: return gtrue();
    case 1: return gfalse();
    case 2:
    case 3: {
      std::vector<GFPtr> members;
      int width = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < width; ++i) members.push_back(random_negative(rng, depth - 1, natoms));
      return pick == 2 ? gand(std::move(members)) : gor(std::move(members));
    }
    default:
      return gimplies(random_ground(rng, depth - 1, natoms),
                      random_negative(rng, depth - 1, natoms));
  }
}

HTInterpretation random_ht(std::mt19937& rng, const std::vector<GroundAtom>& universe) {
  AtomSet here, there;
  for (const auto& a : universe) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: break;
      case 1: there.insert(a); break;
      default:
        here.insert(a);
        there.insert(a);
        break;
    }
  }
  return make_ht(std::move(here), std::move(there));
}

}  // namespace

TEST_CASE("grounding expands quantifiers and evaluates comparisons") {
  fo::Declarations decls{{"N", fo::Sort::Integer}};
  GFPtr g = ground_text("forall int N (1 <= N & N <= 2 -> p(N))", ints(1, 2));
  CHECK(equal(*g, *gand({gatom(atom("p", {1})), gatom(atom("p", {2}))})));

  CHECK(equal(*ground_text("#false", ints(0, 1)), *gfalse()));

  GFPtr val = ground_text("p(2*2)", ints(0, 4));
  CHECK(equal(*val, *gatom(atom("p", {4}))));
}

TEST_CASE("grounding checks the domain and closedness") {
  CHECK_THROWS_AS(ground_text("p(7)", ints(0, 2)), DomainError);
  CHECK_THROWS_AS(ground_text("p(a)", ints(0, 2)), DomainError);
  CHECK_THROWS_AS(hta::ground::ground(*fo::parse_formula("p(X)"), ints(0, 2)), DomainError);
  CHECK_NOTHROW(ground_text("p(a)", ints(0, 2, {"a"})));
  CHECK_THROWS_AS(ground_text("p(#inf)", ints(0, 2)), DomainError);
  CHECK_NOTHROW(ground_text("p(#inf)", ints(0, 2, {}, true)));
}

TEST_CASE("quantifier instances that leave the pool are dropped") {
  // over 0..3 the instance for the largest numeral would mention p(4)
  GFPtr g = ground_text("forall int N (p(N) -> p(N+1))", ints(0, 3));
  AtomSet atoms = atoms_of(*g);
  CHECK(atoms.size() == 4);  // p(0)..p(3)
  CHECK(atoms.count(atom("p", {3})));
  CHECK(!atoms.count(atom("p", {4})));
  // generic quantifiers range over the full pool
  GFPtr h = ground_text("forall X (p(X))", ints(0, 1, {"a"}));
  CHECK(atoms_of(*h).size() == 3);
}

TEST_CASE("classical satisfaction") {
  GFPtr f = gor({gatom(atom("p")), gneg(gatom(atom("p")))});
  CHECK(sat_classical({atom("p")}, *f));
  CHECK(sat_classical({}, *f));
  CHECK(sat_classical({}, *gtrue()));
  CHECK(!sat_classical({}, *gfalse()));
  CHECK(sat_classical({atom("q")}, *gimplies(gatom(atom("p")), gatom(atom("q")))));
  // empty conjunction is true, empty disjunction false
  CHECK(sat_classical({}, *gand({})));
  CHECK(!sat_classical({}, *gor({})));
}

TEST_CASE("here-and-there satisfaction") {
  GFPtr em = gor({gatom(atom("p")), gneg(gatom(atom("p")))});
  CHECK(!sat_ht(make_ht({}, {atom("p")}), *em));
  CHECK(sat_ht(make_ht({atom("p")}, {atom("p")}), *em));
  CHECK(sat_ht(make_ht({}, {}), *em));

  // the weaker three-way disjunction holds where excluded middle fails
  GFPtr q = gatom(atom("q"));
  GFPtr hosoi = gor({q, gor({gimplies(q, gneg(q)), gneg(gneg(q))})});
  for (auto& ht : {make_ht({}, {}), make_ht({}, {atom("q")}), make_ht({atom("q")}, {atom("q")})})
    CHECK(sat_ht(ht, *hosoi));

  CHECK_THROWS_AS(make_ht({atom("p")}, {}), Error);
}

TEST_CASE("total HT-interpretations collapse to classical satisfaction") {
  std::mt19937 rng(424242);
  std::vector<GroundAtom> universe;
  for (int i = 0; i < 4; ++i) universe.push_back(atom("a" + std::to_string(i)));
  int n = 0;
  for (int i = 0; i < 1200; ++i) {
    GFPtr f = random_ground(rng, 4, 4);
    AtomSet j;
    for (const auto& a : universe)
      if (rng() % 2) j.insert(a);
    CHECK(sat_ht(make_ht(j, j), *f) == sat_classical(j, *f));
    ++n;
  }
  CHECK(n >= 1000);
}

TEST_CASE("persistence: HT satisfaction implies classical satisfaction at there") {
  std::mt19937 rng(31337);
  std::vector<GroundAtom> universe;
  for (int i = 0; i < 4; ++i) universe.push_back(atom("a" + std::to_string(i)));
  for (int i = 0; i < 1200; ++i) {
    GFPtr f = random_ground(rng, 4, 4);
    HTInterpretation ht = random_ht(rng, universe);
    if (sat_ht(ht, *f)) CHECK(sat_classical(ht.there, *f));
  }
}

TEST_CASE("negative formulas and the tautology transfer") {
  CHECK(is_negative(*gneg(gatom(atom("p")))));
  CHECK(!is_negative(*gatom(atom("p"))));
  CHECK(is_negative(*gimplies(gatom(atom("p")), gfalse())));
  CHECK(is_negative(*gtrue()));
  CHECK(is_negative(*gfalse()));
  CHECK(!is_negative(*gor({gatom(atom("p")), gneg(gatom(atom("p")))})));

  // every negative classical tautology is satisfied by all HT-interpretations
  std::mt19937 rng(777);
  std::vector<GroundAtom> universe;
  for (int i = 0; i < 3; ++i) universe.push_back(atom("a" + std::to_string(i)));
  int tautologies = 0;
  for (int i = 0; i < 1500; ++i) {
    GFPtr f = random_negative(rng, 4, 3);
    REQUIRE(is_negative(*f));
    if (!is_tautological(*f)) continue;
    ++tautologies;
    for (uint64_t k = 0; k < 27; ++k)
      CHECK(sat_ht(ht_at_index(k, universe), *f));
  }
  CHECK(tautologies > 50);
}

TEST_CASE("tautology checking") {
  CHECK(is_tautological(*ground_text("2*2 = 4", ints(0, 4))));
  CHECK(is_tautological(*gor({gatom(atom("p")), gneg(gatom(atom("p")))})));
  CHECK(!is_tautological(*gatom(atom("p"))));
}

TEST_CASE("simplification preserves both satisfaction relations") {
  std::mt19937 rng(5150);
  fo::Declarations decls{{"N", fo::Sort::Integer}};
  const char* sentences[] = {
      "forall int N (p(N) -> p(N+1))",
      "forall X (p(X) | not p(X))",
      "exists int N (p(N) & 0 <= N)",
      "forall int N (exists int M (q(N,M) & N < M) -> p(N))",
      "forall X (forall Y (q(X,Y) -> q(Y,X)))",
      "exists X (p(X) & not p(X))",
      "forall int N (0 = 1 -> p(N*N))",
      "exists int N (N = 2 & p(N+N))",
  };
  Domain d = ints(0, 2, {"c"});
  for (const char* text : sentences) {
    CAPTURE(text);
    fo::Declarations local{{"M", fo::Sort::Integer}, {"N", fo::Sort::Integer}};
    GFPtr raw = ground_raw(*fo::parse_formula(text, local), d);
    GFPtr simplified = simplify(raw);
    std::vector<GroundAtom> universe = atom_universe({raw.get(), simplified.get()});
    if (universe.size() > 8) continue;
    uint64_t total = 1;
    for (size_t i = 0; i < universe.size(); ++i) total *= 3;
    for (uint64_t k = 0; k < total; ++k) {
      HTInterpretation ht = ht_at_index(k, universe);
      CHECK(sat_ht(ht, *raw) == sat_ht(ht, *simplified));
      CHECK(sat_classical(ht.there, *raw) == sat_classical(ht.there, *simplified));
    }
  }
  // and on random ground trees
  for (int i = 0; i < 1200; ++i) {
    GFPtr raw = random_ground(rng, 4, 3);
    GFPtr simplified = simplify(raw);
    std::vector<GroundAtom> universe;
    for (int a = 0; a < 3; ++a) universe.push_back(atom("a" + std::to_string(a)));
    HTInterpretation ht = random_ht(rng, universe);
    CHECK(sat_ht(ht, *raw) == sat_ht(ht, *simplified));
    CHECK(sat_classical(ht.there, *raw) == sat_classical(ht.there, *simplified));
  }
}

TEST_CASE("stable models by brute force") {
  // chain: one stable model, the whole chain closure
  mg::Program chain = mg::parse_program("p(0). p(X+1) :- p(X).");
  GFPtr g = ground_all(nu::nu_program(chain), ints(0, 3));
  auto universe = atom_universe({g.get()});
  auto models = stable_models(*g, universe);
  REQUIRE(models.size() == 1);
  CHECK(models.front() == AtomSet{atom("p", {0}), atom("p", {1}), atom("p", {2}), atom("p", {3})});

  // an implication alone derives nothing
  GFPtr imp = gimplies(gand({gatom(atom("p")), gneg(gneg(gatom(atom("q"))))}), gatom(atom("q")));
  auto models2 = stable_models(*imp, {atom("p"), atom("q")});
  REQUIRE(models2.size() == 1);
  CHECK(models2.front().empty());

  auto models3 = stable_models(*gtrue(), {});
  REQUIRE(models3.size() == 1);
  CHECK(models3.front().empty());
}

TEST_CASE("enumeration cap and worker-count determinism") {
  std::vector<GroundAtom> universe;
  for (int i = 0; i < 17; ++i) universe.push_back(atom("a" + std::to_string(i)));
  CHECK_THROWS_AS(ht_models(*gtrue(), universe, {}), DomainError);

  // the first disagreement index does not depend on the worker count
  // (3^8 pairs, above the threaded-path threshold)
  std::mt19937 rng(1123);
  std::vector<GroundAtom> small;
  for (int i = 0; i < 8; ++i) small.push_back(atom("a" + std::to_string(i)));
  for (int i = 0; i < 30; ++i) {
    GFPtr f = random_ground(rng, 4, 8);
    GFPtr g = random_ground(rng, 4, 8);
    EnumerationOptions seq, par;
    par.workers = 4;
    CHECK(first_ht_disagreement(*f, *g, small, seq) ==
          first_ht_disagreement(*f, *g, small, par));
  }
}

TEST_CASE("oracle: distinct interval programs produce a validated witness") {
  mg::Program p1 = mg::parse_program("p(X,Y) :- X = 1..2, Y = 1..2.");
  mg::Program p2 = mg::parse_program("p(X,Y) :- X = Y, Y = 1..2.");
  SEReport r = analyze_se(p1, p2, ints(1, 2));
  CHECK(r.verdict == SEVerdict::NotEquivalent);
  REQUIRE(r.witness);
  CHECK(r.witness_validated);

  // symmetry: swapping the programs still finds a witness
  SEResult swapped = check_se(p2, p1, ints(1, 2));
  CHECK(!swapped.equivalent);
  REQUIRE(swapped.witness);
  // the same interpretation, the satisfied side flipped
  CHECK(swapped.witness->ht.here == r.witness->ht.here);
  CHECK(swapped.witness->ht.there == r.witness->ht.there);
  CHECK(swapped.witness->satisfied_side != r.witness->satisfied_side);
}

TEST_CASE("oracle: equivalent pairs over the default domain") {
  auto check_equiv = [](const char* t1, const char* t2) {
    mg::Program p1 = mg::parse_program(t1);
    mg::Program p2 = mg::parse_program(t2);
    SEResult r = check_se(p1, p2, default_domain({&p1, &p2}));
    CAPTURE(t1);
    CHECK(r.equivalent);
  };
  check_equiv("{q(X)} :- p(X+1).", "q(X) :- p(X+1), not not q(X).");
  check_equiv("{q(X,Y)} :- p(X,Y), X < Y. {q(X,X)} :- p(X,X).",
              "{q(X,Y)} :- p(X,Y), X <= Y.");
  check_equiv("q(X+Y) :- p(X), p(Y), X <= Y.", "q(X+Y) :- p(X), p(Y).");
}

TEST_CASE("oracle: a program vs its second rule, witness mentions the constant") {
  mg::Program both = mg::parse_program("q(X) :- p(X). q(X+1) :- p(X+1).");
  mg::Program second = mg::parse_program("q(X+1) :- p(X+1).");
  Domain d = ints(0, 2, {"a"});
  SEReport r = analyze_se(both, second, d);
  CHECK(r.verdict == SEVerdict::NotEquivalent);
  REQUIRE(r.witness);
  CHECK(r.witness_validated);
  bool mentions_a = false;
  for (const auto& at : r.witness->ht.there)
    for (const auto& arg : at.args)
      if (arg == Precomputed::symbol("a")) mentions_a = true;
  CHECK(mentions_a);
  // and the first rule alone is equivalent to the whole program
  mg::Program first = mg::parse_program("q(X) :- p(X).");
  CHECK(check_se(both, first, d).equivalent);
}

TEST_CASE("ground instances of the axiom groups are HT-valid over small domains") {
  std::mt19937 rng(90210);
  Domain d = ints(-2, 2, {"ab", "ac"}, true);

  std::vector<fo::FOFormulaPtr> axioms = kernel::group_b_catalog();
  for (const auto& a : kernel::group_d_catalog()) axioms.push_back(a);
  // a few Hosoi instances (group A) over ground atoms
  fo::Declarations decls;
  axioms.push_back(fo::parse_formula("p(1) | (p(1) -> q(ab)) | not q(ab)"));
  axioms.push_back(fo::parse_formula("q(ab) | (q(ab) -> not q(ab)) | not not q(ab)"));
  // group C facts
  axioms.push_back(fo::parse_formula("ab < ac"));
  axioms.push_back(fo::parse_formula("not (#sup <= #inf)"));

  for (const auto& axiom : axioms) {
    CAPTURE(fo::to_string(*axiom));
    GFPtr g = hta::ground::ground(*axiom, d);
    std::vector<GroundAtom> universe = atom_universe({g.get()});
    REQUIRE(universe.size() <= 4);
    uint64_t total = 1;
    for (size_t i = 0; i < universe.size(); ++i) total *= 3;
    for (uint64_t k = 0; k < total; ++k)
      CHECK(sat_ht(ht_at_index(k, universe), *g));
  }
}

TEST_CASE("default domains") {
  mg::Program p = mg::parse_program("{q(X)} :- p(X+1).");
  Domain d = default_domain({&p});
  CHECK(d.lo == -1);
  CHECK(d.hi == 3);
  CHECK(d.symbolic_consts.empty());
  CHECK(!d.include_inf_sup);

  mg::Program noints = mg::parse_program("q(X,Y) :- p(X,Y), X < Y.");
  d = default_domain({&noints});
  CHECK(d.lo == 0);
  CHECK(d.hi == 1);

  mg::Program withsym = mg::parse_program("p(a). q(#sup).");
  d = default_domain({&withsym});
  CHECK(d.symbolic_consts == std::vector<std::string>{"a"});
  CHECK(d.include_inf_sup);
}
