#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "hta/error.hpp"
#include "hta/fo/text.hpp"
#include "hta/ground/ht.hpp"
#include "hta/kernel/axioms.hpp"
#include "hta/kernel/checker.hpp"
#include "hta/kernel/equivalence.hpp"
#include "hta/kernel/script_json.hpp"
#include "hta/mg/parser.hpp"
#include "support/corpus.hpp"
#include "support/indep_checker.hpp"
#include "support/mutate.hpp"
#include "support/random_proofs.hpp"

using namespace hta;
using namespace hta::kernel;

namespace {

Sequent seq(std::vector<std::string> assumptions, const std::string& conclusion,
            const fo::Declarations& decls = {}) {
  Sequent s;
  for (const auto& a : assumptions) s.assumptions.insert(fo::parse_formula(a, decls));
  s.conclusion = fo::parse_formula(conclusion, decls);
  return s;
}

Verdict check_corpus(const std::string& name, const CheckOptions& opts = {}) {
  return check_proof(parse_script_text(hta::test::corpus_proof(name)), opts);
}

using hta::test::mutate_script;

void expect_rejected_at(const ProofScript& script, const std::string& line_id) {
  Verdict v = check_proof(script);
  CHECK(!v.accepted);
  REQUIRE(v.first_failure.has_value());
  CHECK(v.lines[*v.first_failure].id == line_id);
}

}  // namespace

TEST_CASE("identity and reflexivity axioms") {
  fo::Declarations decls{{"N", fo::Sort::Integer}};
  CHECK(is_axiom_identity(seq({"p"}, "p")));
  CHECK(is_axiom_identity(seq({"forall X (p(X))"}, "forall Y (p(Y))")));
  CHECK(is_axiom_identity(seq({}, "N+1 = N+1", decls)));
  CHECK(!is_axiom_identity(seq({"p"}, "q")));
  CHECK(!is_axiom_identity(seq({}, "N+1 = 1+N", decls)));
  CHECK(!is_axiom_identity(seq({"p", "q"}, "p")));
}

TEST_CASE("hosoi instances") {
  auto is = [](const std::string& text) {
    return is_hosoi_instance(*fo::parse_formula(text));
  };
  CHECK(is("q | (q -> not q) | not not q"));
  CHECK(is("p(X) | (p(X) -> q) | not q"));
  CHECK(!is("p | not p"));
  CHECK(!is("q | (p -> not q) | not not q"));    // first disjunct must match
  CHECK(!is("q | (q -> not q) | not q"));        // third must negate the consequent
  CHECK(!is("(q | (q -> not q)) | not not q"));  // left-associated shape is not matched
}

TEST_CASE("group B catalog") {
  auto is = [](const std::string& text) { return is_group_b_axiom(*fo::parse_formula(text)); };
  CHECK(is("forall X Y (X < Y | not X < Y)"));
  CHECK(is("forall X Y (X <= Y <-> X < Y | X = Y)"));
  CHECK(is("forall X (#inf <= X)"));
  CHECK(is("forall X (X <= #sup)"));
  CHECK(is("forall U V (U <= V | V <= U)"));  // alpha-insensitive
  CHECK(!is("forall X (X <= #inf)"));
  CHECK(!is("forall X Y (X <= Y)"));
}

TEST_CASE("group C facts") {
  auto is = [](const std::string& text) { return is_group_c_axiom(*fo::parse_formula(text)); };
  CHECK(is("ab < ac"));
  CHECK(is("not (#sup <= #inf)"));
  CHECK(is("3 < 12"));
  CHECK(!is("ac < ab"));
  CHECK(!is("not (ab < ac)"));
  CHECK(!is("2+2 = 4"));  // arithmetic belongs to group D
  CHECK(!is("forall X (X = X)"));
}

TEST_CASE("group D decision procedure") {
  fo::Declarations decls{{"N", fo::Sort::Integer}};
  auto status = [&](const std::string& text, bool marked = false, bool enabled = false) {
    return is_group_d_axiom(*fo::parse_formula(text, decls), marked, enabled);
  };
  CHECK(status("2*2 = 4") == GroupDStatus::Yes);
  CHECK(status("2+2 = 5") == GroupDStatus::No);
  CHECK(status("forall int M int N (M <= N | N <= M)") == GroupDStatus::Yes);
  CHECK(status("forall int A int B (A + B = B + A)") == GroupDStatus::Yes);
  CHECK(status("forall int N (N < N + 1)") == GroupDStatus::Yes);
  CHECK(status("forall int N (N*N >= 0)") == GroupDStatus::No);
  CHECK(status("forall int N (N*N >= 0)", true, false) == GroupDStatus::No);
  CHECK(status("forall int N (N*N >= 0)", true, true) == GroupDStatus::YesTrusted);
  // false or non-arithmetical sentences are never trusted
  CHECK(status("1 = 2", true, true) == GroupDStatus::No);
  CHECK(status("forall X (X = X)", true, true) == GroupDStatus::No);
  CHECK(status("p(N)", true, true) == GroupDStatus::No);
  CHECK(status("ab < ac") == GroupDStatus::No);  // symbolic, not arithmetical
}

TEST_CASE("corpus proofs are accepted") {
  for (const char* name :
       {"choice_vs_dneg_prop.json", "choice_vs_dneg_ab.json", "choice_vs_dneg_ba.json",
        "shifted_copy_ab.json", "shifted_copy_ba.json", "order_cases_ab.json",
        "order_cases_ba.json", "ordered_sum_ab.json", "ordered_sum_ba.json",
        "successor_chain_ba.json", "shift_down_rederivation.json"}) {
    CAPTURE(name);
    Verdict v = check_corpus(name);
    CHECK(v.accepted);
    CHECK(!v.uses_trusted_arithmetic);
  }
}

TEST_CASE("propositional proof is accepted in Int mode") {
  CheckOptions opts;
  opts.int_mode = true;
  CHECK(check_corpus("choice_vs_dneg_prop.json", opts).accepted);
}

TEST_CASE("Int mode agrees with full mode on axiom-group-free scripts") {
  const char* uses_groups[] = {"choice_vs_dneg_ba.json", "order_cases_ab.json",
                               "order_cases_ba.json", "ordered_sum_ab.json",
                               "shift_down_rederivation.json"};
  const char* int_only[] = {"choice_vs_dneg_prop.json", "choice_vs_dneg_ab.json",
                            "shifted_copy_ab.json", "shifted_copy_ba.json",
                            "ordered_sum_ba.json", "successor_chain_ba.json"};
  CheckOptions plain, im;
  im.int_mode = true;
  for (const char* name : int_only) {
    CAPTURE(name);
    CHECK(check_corpus(name, plain).accepted == check_corpus(name, im).accepted);
  }
  for (const char* name : uses_groups) {
    CAPTURE(name);
    CHECK(check_corpus(name, plain).accepted);
    CHECK(!check_corpus(name, im).accepted);
  }
}

TEST_CASE("single-line mutations are rejected at the mutated line") {
  // wrong rule shape
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "3",
                                   [](nlohmann::json& l) { l["rule"] = "and-i"; }),
                     "3");
  // wrong premise order for implication elimination
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "5",
                                   [](nlohmann::json& l) { l["premises"] = {"4", "1"}; }),
                     "5");
  // case premises of or-e swapped
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "10",
                                   [](nlohmann::json& l) { l["premises"] = {"5", "9", "6"}; }),
                     "10");
  // unknown rule name
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "8",
                                   [](nlohmann::json& l) { l["rule"] = "frobnicate"; }),
                     "8");
  // dangling premise
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "9",
                                   [](nlohmann::json& l) { l["premises"] = {"99"}; }),
                     "9");
  // implication consequent does not match the premise
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "11",
                                   [](nlohmann::json& l) {
                                     l["formula"] = "p & not not q -> p";
                                   }),
                     "11");
  // identity axiom with an empty assumption set
  expect_rejected_at(mutate_script("choice_vs_dneg_prop.json", "2",
                                   [](nlohmann::json& l) {
                                     l["assumptions"] = nlohmann::json::array();
                                   }),
                     "2");
  // generic witness substituted for an integer variable
  expect_rejected_at(mutate_script("choice_vs_dneg_ab.json", "2",
                                   [](nlohmann::json& l) { l["hints"]["term"] = "X"; }),
                     "2");
  // conclusion is not a generalization of the premise
  expect_rejected_at(
      mutate_script("choice_vs_dneg_ab.json", "13",
                    [](nlohmann::json& l) {
                      l["formula"] = "forall int N (p(N+2) & not not q(N) -> q(N))";
                    }),
      "13");
  // excluded middle is not a Hosoi instance
  expect_rejected_at(mutate_script("choice_vs_dneg_ba.json", "3",
                                   [](nlohmann::json& l) {
                                     l["formula"] = "p(N+1) | not p(N+1)";
                                   }),
                     "3");
  // equality rule without its hints
  expect_rejected_at(mutate_script("shift_down_rederivation.json", "6",
                                   [](nlohmann::json& l) { l.erase("hints"); }),
                     "6");
  // wrong instantiation term under forall-e
  expect_rejected_at(mutate_script("shift_down_rederivation.json", "5",
                                   [](nlohmann::json& l) { l["hints"]["term"] = "2"; }),
                     "5");
  // false arithmetic fact
  expect_rejected_at(mutate_script("shift_down_rederivation.json", "3",
                                   [](nlohmann::json& l) {
                                     l["formula"] = "forall int M int K ((M - K) + K = K)";
                                   }),
                     "3");
}

TEST_CASE("eigenvariable side conditions") {
  // a valid generalization, then the same script with the quantified
  // variable leaking into the assumptions
  const char* valid = R"json({
    "declarations": [{"name": "N", "sort": "int"}],
    "lines": [
      {"id": "1", "assumptions": ["p(N)"], "formula": "p(N)", "rule": "id"},
      {"id": "2", "assumptions": ["p(N)"], "formula": "p(N) | q", "rule": "or-i-left", "premises": ["1"]},
      {"id": "3", "assumptions": [], "formula": "p(N) -> p(N) | q", "rule": "imp-i", "premises": ["2"]},
      {"id": "4", "assumptions": [], "formula": "forall int N (p(N) -> p(N) | q)", "rule": "forall-i", "premises": ["3"]}
    ]
  })json";
  CHECK(check_proof(parse_script_text(valid)).accepted);

  nlohmann::json j = nlohmann::json::parse(valid);
  j["lines"][3] = {{"id", "4"},
                   {"assumptions", {"p(N)"}},
                   {"formula", "forall int N (p(N) | q)"},
                   {"rule", "forall-i"},
                   {"premises", {"2"}}};
  Verdict v = check_proof(parse_script_text(j.dump()));
  CHECK(!v.accepted);
  REQUIRE(v.first_failure);
  CHECK(v.lines[*v.first_failure].id == "4");
  CHECK(v.lines[*v.first_failure].message.find("eigenvariable") != std::string::npos);

  // exists-e with the witness leaking into the conclusion
  const char* bad_exists = R"json({
    "declarations": [{"name": "N", "sort": "int"}],
    "lines": [
      {"id": "1", "assumptions": ["exists int N (p(N))"], "formula": "exists int N (p(N))", "rule": "id"},
      {"id": "2", "assumptions": ["p(N)"], "formula": "p(N)", "rule": "id"},
      {"id": "3", "assumptions": ["exists int N (p(N))"], "formula": "p(N)", "rule": "exists-e", "premises": ["1", "2"]}
    ]
  })json";
  v = check_proof(parse_script_text(bad_exists));
  CHECK(!v.accepted);
  REQUIRE(v.first_failure);
  CHECK(v.lines[*v.first_failure].id == "3");
}

TEST_CASE("exists rules work end to end") {
  const char* script = R"json({
    "declarations": [{"name": "N", "sort": "int"}],
    "lines": [
      {"id": "1", "assumptions": ["p(3)"], "formula": "p(3)", "rule": "id"},
      {"id": "2", "assumptions": ["p(3)"], "formula": "exists int N (p(N))", "rule": "exists-i", "premises": ["1"], "hints": {"term": "3"}},
      {"id": "3", "assumptions": ["p(N)"], "formula": "p(N)", "rule": "id"},
      {"id": "4", "assumptions": ["p(N)"], "formula": "exists int M (p(M))", "rule": "exists-i", "premises": ["3"], "hints": {"term": "N"}},
      {"id": "5", "assumptions": ["p(3)"], "formula": "exists int M (p(M))", "rule": "exists-e", "premises": ["2", "4"]}
    ]
  })json";
  CHECK(check_proof(parse_script_text(script)).accepted);
}

TEST_CASE("equality rewriting works in both directions") {
  const char* script = R"json({
    "declarations": [{"name": "V", "sort": "int"}],
    "lines": [
      {"id": "1", "assumptions": [], "formula": "1 + 1 = 2", "rule": "groupD"},
      {"id": "2", "assumptions": ["p(2)"], "formula": "p(2)", "rule": "id"},
      {"id": "3", "assumptions": ["p(2)"], "formula": "p(1+1)", "rule": "eq-backward", "premises": ["1", "2"], "hints": {"var": "V", "template": "p(V)"}},
      {"id": "4", "assumptions": ["p(2)"], "formula": "p(2)", "rule": "eq-forward", "premises": ["1", "3"], "hints": {"var": "V", "template": "p(V)"}}
    ]
  })json";
  CHECK(check_proof(parse_script_text(script)).accepted);

  // swapping the directions breaks both rewriting lines
  nlohmann::json j = nlohmann::json::parse(script);
  j["lines"][2]["rule"] = "eq-forward";
  Verdict v = check_proof(parse_script_text(j.dump()));
  CHECK(!v.accepted);
  REQUIRE(v.first_failure);
  CHECK(v.lines[*v.first_failure].id == "3");
}

TEST_CASE("goal mismatch rejects the script") {
  nlohmann::json j = nlohmann::json::parse(hta::test::corpus_proof("choice_vs_dneg_prop.json"));
  j["goal"]["formula"] = "p -> q";
  Verdict v = check_proof(parse_script_text(j.dump()));
  CHECK(!v.accepted);
  CHECK(!v.goal_ok);
}

TEST_CASE("deleting an unused line leaves the rest of the verdict unchanged") {
  nlohmann::json j = nlohmann::json::parse(hta::test::corpus_proof("choice_vs_dneg_prop.json"));
  nlohmann::json spare = {{"id", "spare"},
                          {"assumptions", {"r"}},
                          {"formula", "r"},
                          {"rule", "id"}};
  j["lines"].insert(j["lines"].begin() + 4, spare);
  ProofScript with_spare = parse_script_text(j.dump());
  Verdict v1 = check_proof(with_spare);
  CHECK(v1.accepted);

  ProofScript without = with_spare;
  without.lines.erase(without.lines.begin() + 4);
  Verdict v2 = check_proof(without);
  CHECK(v2.accepted);
  REQUIRE(v2.lines.size() + 1 == v1.lines.size());
  for (size_t i = 0, k = 0; i < v1.lines.size(); ++i) {
    if (v1.lines[i].id == "spare") continue;
    CHECK(v1.lines[i].ok == v2.lines[k].ok);
    ++k;
  }
}

TEST_CASE("trusted arithmetic is gated and surfaced") {
  const char* script = R"json({
    "lines": [
      {"id": "1", "assumptions": [], "formula": "forall int N (N*N >= 0)", "rule": "groupD-trusted"}
    ]
  })json";
  ProofScript s = parse_script_text(script);
  CHECK(!check_proof(s).accepted);
  CheckOptions opts;
  opts.allow_trusted_arith = true;
  Verdict v = check_proof(s, opts);
  CHECK(v.accepted);
  CHECK(v.uses_trusted_arithmetic);
  // plain groupD never accepts it, trusted or not
  const char* plain = R"json({
    "lines": [
      {"id": "1", "assumptions": [], "formula": "forall int N (N*N >= 0)", "rule": "groupD"}
    ]
  })json";
  CHECK(!check_proof(parse_script_text(plain), opts).accepted);
}

TEST_CASE("equivalence task rejects a direction with an unproved goal") {
  mg::Program a = mg::parse_program(hta::test::corpus_program("successor_chain_a.lp"));
  mg::Program b = mg::parse_program(hta::test::corpus_program("successor_chain_b.lp"));
  ProofScript incomplete =
      parse_script_text(hta::test::corpus_proof("successor_chain_ab_incomplete.json"));
  ProofScript back = parse_script_text(hta::test::corpus_proof("successor_chain_ba.json"));
  EquivalenceVerdict v = check_equivalence_task(a, b, incomplete, back);
  CHECK(!v.accepted);
  CHECK(v.dir_2to1.ok());
  CHECK(!v.dir_1to2.ok());
  REQUIRE(v.dir_1to2.missing.size() == 1);
  CHECK(v.dir_1to2.missing.front().find(">") != std::string::npos);
}

TEST_CASE("every line of the propositional corpus proof is HT-valid") {
  ProofScript script = parse_script_text(hta::test::corpus_proof("choice_vs_dneg_prop.json"));
  REQUIRE(check_proof(script).accepted);
  ground::Domain d;  // no constants occur; any pool will do
  d.lo = 0;
  d.hi = 0;
  for (const auto& line : script.lines) {
    fo::FOFormulaPtr f = line.sequent.conclusion;
    const auto& items = line.sequent.assumptions.items();
    for (size_t i = items.size(); i-- > 0;) f = fo::implies(items[i], f);
    ground::GFPtr g = ground::ground(*f, d);
    std::vector<ground::GroundAtom> universe = ground::atom_universe({g.get()});
    uint64_t total = 1;
    for (size_t i = 0; i < universe.size(); ++i) total *= 3;
    for (uint64_t k = 0; k < total; ++k) {
      CAPTURE(line.id);
      CHECK(ground::sat_ht(ground::ht_at_index(k, universe), *g));
    }
  }
}

TEST_CASE("random accepted scripts pass both checkers, in both modes") {
  std::mt19937 rng(0xACCE9);
  CheckOptions im;
  im.int_mode = true;
  for (int i = 0; i < 60; ++i) {
    ProofScript script = hta::test::random_accepted_script(rng, 14);
    Verdict v = check_proof(script);
    CAPTURE(i);
    CHECK(v.accepted);
    CHECK(hta::test::indep_check(script).accepted);
    // generated scripts use no axiom groups, so Int mode agrees
    CHECK(check_proof(script, im).accepted == v.accepted);
  }
}
