#include "demo.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hta/error.hpp"
#include "hta/fo/ops.hpp"
#include "hta/fo/text.hpp"
#include "hta/ground/se.hpp"
#include "hta/kernel/equivalence.hpp"
#include "hta/kernel/script_json.hpp"
#include "hta/mg/parser.hpp"
#include "hta/nu/translate.hpp"

namespace hta::tools {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open `" + path + "`");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class Demo {
 public:
  explicit Demo(std::string corpus) : corpus_(std::move(corpus)) {}

  mg::Program program(const std::string& name) {
    return mg::parse_program(slurp(corpus_ + "/programs/" + name));
  }

  kernel::ProofScript script(const std::string& name) {
    return kernel::parse_script_file(corpus_ + "/proofs/" + name);
  }

  void run_case(const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    bool ok = detail.empty();
    if (!ok) ++failures_;
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n";
  }

  // Translations of `file` must match the expected sentences pairwise, up
  // to alpha equivalence and reordering of the quantifier prefix.
  std::string check_translation(const std::string& file,
                                const std::vector<std::string>& expected) {
    std::vector<fo::FOFormulaPtr> got = nu::nu_program(program(file));
    if (got.size() != expected.size())
      return "expected " + std::to_string(expected.size()) + " sentences, got " +
             std::to_string(got.size());
    for (size_t i = 0; i < got.size(); ++i) {
      fo::FOFormulaPtr want = fo::parse_formula(expected[i]);
      if (!fo::alpha_equal_modulo_prefix(got[i], want))
        return "sentence " + std::to_string(i + 1) + ": got `" + fo::to_string(*got[i]) +
               "`, want `" + expected[i] + "`";
    }
    return {};
  }

  std::string check_task(const std::string& file1, const std::string& file2,
                         const std::string& proof12, const std::string& proof21,
                         bool expect_accepted) {
    kernel::EquivalenceVerdict v = kernel::check_equivalence_task(
        program(file1), program(file2), script(proof12), script(proof21));
    if (v.accepted != expect_accepted)
      return std::string(expect_accepted ? "expected certification: " : "expected rejection: ") +
             v.summary();
    return {};
  }

  std::string check_oracle(const std::string& file1, const std::string& file2,
                           std::optional<ground::Domain> domain,
                           ground::SEVerdict expected) {
    mg::Program p1 = program(file1);
    mg::Program p2 = program(file2);
    ground::Domain d = domain ? *domain : ground::default_domain({&p1, &p2});
    ground::SEReport r = ground::analyze_se(p1, p2, d);
    if (r.verdict != expected) return "unexpected oracle outcome:\n" + ground::report_text(r);
    return {};
  }

  int failures() const { return failures_; }

  std::string corpus_;
  int failures_ = 0;
};

}  // namespace

int run_demo(const std::string& corpus_dir) {
  Demo demo(corpus_dir);

  demo.run_case("translate: interval assignment pair", [&] {
    return demo.check_translation(
        "interval_vs_aliased_a.lp",
        {"forall int M int N (1 <= M <= 2 & 1 <= N <= 2 -> p(M,N))"});
  });
  demo.run_case("translate: aliased assignment pair", [&] {
    return demo.check_translation("interval_vs_aliased_b.lp",
                                  {"forall X int N (X = N & 1 <= N <= 2 -> p(X,N))"});
  });
  demo.run_case("oracle: interval vs aliased assignment differ over ints 1..2", [&] {
    ground::Domain d;
    d.lo = 1;
    d.hi = 2;
    return demo.check_oracle("interval_vs_aliased_a.lp", "interval_vs_aliased_b.lp", d,
                             ground::SEVerdict::NotEquivalent);
  });

  demo.run_case("translate: choice rule", [&] {
    return demo.check_translation("choice_vs_dneg_a.lp",
                                  {"forall int N (p(N+1) -> q(N) | not q(N))"});
  });
  demo.run_case("translate: double-negation rule", [&] {
    return demo.check_translation("choice_vs_dneg_b.lp",
                                  {"forall int N (p(N+1) & not not q(N) -> q(N))"});
  });
  demo.run_case("proofs: choice vs double negation certified", [&] {
    return demo.check_task("choice_vs_dneg_a.lp", "choice_vs_dneg_b.lp", "choice_vs_dneg_ab.json",
                           "choice_vs_dneg_ba.json", true);
  });
  demo.run_case("oracle: choice vs double negation agree (default domain)", [&] {
    return demo.check_oracle("choice_vs_dneg_a.lp", "choice_vs_dneg_b.lp", std::nullopt,
                             ground::SEVerdict::EquivalentOverDomain);
  });

  demo.run_case("translate: shifted copy program", [&] {
    return demo.check_translation("shifted_copy.lp", {"forall X (p(X) -> q(X))",
                                                      "forall int N (p(N+1) -> q(N+1))"});
  });
  demo.run_case("proofs: shifted copy equals its first rule", [&] {
    return demo.check_task("shifted_copy.lp", "shifted_copy_first.lp", "shifted_copy_ab.json",
                           "shifted_copy_ba.json", true);
  });
  demo.run_case("oracle: shifted copy equals its first rule ({a}, ints 0..2)", [&] {
    ground::Domain d;
    d.lo = 0;
    d.hi = 2;
    d.symbolic_consts = {"a"};
    return demo.check_oracle("shifted_copy.lp", "shifted_copy_first.lp", d,
                             ground::SEVerdict::EquivalentOverDomain);
  });
  demo.run_case("oracle: shifted copy vs second rule alone differ ({a}, ints 0..2)", [&] {
    ground::Domain d;
    d.lo = 0;
    d.hi = 2;
    d.symbolic_consts = {"a"};
    return demo.check_oracle("shifted_copy.lp", "shifted_copy_second.lp", d,
                             ground::SEVerdict::NotEquivalent);
  });

  demo.run_case("translate: strict and equal choice cases", [&] {
    return demo.check_translation(
        "order_cases_a.lp", {"forall X Y (p(X,Y) & X < Y -> q(X,Y) | not q(X,Y))",
                             "forall X (p(X,X) -> q(X,X) | not q(X,X))"});
  });
  demo.run_case("translate: non-strict choice case", [&] {
    return demo.check_translation("order_cases_b.lp",
                                  {"forall X Y (p(X,Y) & X <= Y -> q(X,Y) | not q(X,Y))"});
  });
  demo.run_case("proofs: order cases certified (group B)", [&] {
    return demo.check_task("order_cases_a.lp", "order_cases_b.lp", "order_cases_ab.json",
                           "order_cases_ba.json", true);
  });
  demo.run_case("oracle: order cases agree (default domain)", [&] {
    return demo.check_oracle("order_cases_a.lp", "order_cases_b.lp", std::nullopt,
                             ground::SEVerdict::EquivalentOverDomain);
  });

  demo.run_case("translate: ordered-body sum", [&] {
    return demo.check_translation("ordered_sum_a.lp",
                                  {"forall int M int N (p(M) & p(N) & M <= N -> q(M+N))"});
  });
  demo.run_case("translate: unordered-body sum", [&] {
    return demo.check_translation("ordered_sum_b.lp",
                                  {"forall int M int N (p(M) & p(N) -> q(M+N))"});
  });
  demo.run_case("proofs: sum rules certified (group D)", [&] {
    return demo.check_task("ordered_sum_a.lp", "ordered_sum_b.lp", "ordered_sum_ab.json",
                           "ordered_sum_ba.json", true);
  });
  demo.run_case("oracle: sum rules agree (default domain)", [&] {
    return demo.check_oracle("ordered_sum_a.lp", "ordered_sum_b.lp", std::nullopt,
                             ground::SEVerdict::EquivalentOverDomain);
  });

  demo.run_case("translate: successor chain", [&] {
    return demo.check_translation("successor_chain_a.lp",
                                  {"p(0)", "forall int N (p(N) -> p(N+1))"});
  });
  demo.run_case("translate: successor chain with bound rule", [&] {
    return demo.check_translation("successor_chain_b.lp",
                                  {"p(0)", "forall int N (p(N) -> p(N+1))",
                                   "forall int N (N+1 > 0 -> p(N))"});
  });
  demo.run_case("proofs: successor chain backward direction accepted", [&] {
    kernel::Verdict v = kernel::check_proof(demo.script("successor_chain_ba.json"));
    return v.accepted ? std::string{} : v.summary();
  });
  demo.run_case("proofs: successor chain task not certified (forward goal unproved)", [&] {
    return demo.check_task("successor_chain_a.lp", "successor_chain_b.lp",
                           "successor_chain_ab_incomplete.json", "successor_chain_ba.json",
                           false);
  });
  demo.run_case("ground: successor chain HT-equivalent over ints 0..3 and 0..5", [&] {
    for (Int hi : {Int(3), Int(5)}) {
      ground::Domain d;
      d.lo = 0;
      d.hi = hi;
      std::string r = demo.check_oracle("successor_chain_a.lp", "successor_chain_b.lp", d,
                                        ground::SEVerdict::EquivalentOverDomain);
      if (!r.empty()) return r;
    }
    return std::string{};
  });
  demo.run_case("ground: successor chain stable model over ints 0..3", [&] {
    ground::Domain d;
    d.lo = 0;
    d.hi = 3;
    ground::GFPtr g = ground::ground_all(nu::nu_program(demo.program("successor_chain_a.lp")), d);
    std::vector<ground::GroundAtom> universe = ground::atom_universe({g.get()});
    std::vector<ground::AtomSet> models = ground::stable_models(*g, universe);
    ground::AtomSet expected;
    for (int n = 0; n <= 3; ++n)
      expected.insert({"p", {Precomputed::numeral(n)}});
    if (models.size() != 1 || models.front() != expected) {
      std::string got;
      for (const auto& m : models) {
        got += "{";
        for (const auto& a : m) got += a.str() + " ";
        got += "} ";
      }
      return "unexpected stable models: " + got;
    }
    return std::string{};
  });

  demo.run_case("proof: propositional choice equivalence (Int mode)", [&] {
    kernel::CheckOptions opts;
    opts.int_mode = true;
    kernel::Verdict v = kernel::check_proof(demo.script("choice_vs_dneg_prop.json"), opts);
    return v.accepted ? std::string{} : v.summary();
  });

  std::cout << (demo.failures() == 0 ? "all demo cases passed\n"
                                     : std::to_string(demo.failures()) + " demo case(s) failed\n");
  return demo.failures() == 0 ? 0 : 1;
}

}  // namespace hta::tools
