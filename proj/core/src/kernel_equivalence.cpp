#include "hta/kernel/equivalence.hpp"

#include "hta/fo/ops.hpp"
#include "hta/nu/translate.hpp"

namespace hta::kernel {

namespace {

DirectionReport check_direction(const std::vector<fo::FOFormulaPtr>& source,
                                const std::vector<fo::FOFormulaPtr>& target,
                                const ProofScript& script, const CheckOptions& opts) {
  DirectionReport report;
  report.verdict = check_proof(script, opts);

  AssumptionSet source_set((std::vector<fo::FOFormulaPtr>(source)));
  for (const auto& goal : target) {
    bool covered = false;
    for (size_t i = 0; i < script.lines.size() && !covered; ++i) {
      if (!report.verdict.lines[i].ok) continue;
      const Sequent& s = script.lines[i].sequent;
      covered = fo::alpha_equal(*s.conclusion, *goal) && s.assumptions.subset_of(source_set);
    }
    (covered ? report.proved : report.missing).push_back(fo::to_string(*goal));
  }
  return report;
}

}  // namespace

std::string EquivalenceVerdict::summary() const {
  if (accepted) {
    std::string s = "strongly equivalent (HTA-certified)";
    if (uses_trusted_arithmetic) s += ", uses trusted arithmetic";
    return s;
  }
  std::string s = "not certified:";
  auto describe = [&s](const char* name, const DirectionReport& d) {
    if (d.ok()) return;
    s += std::string(" [") + name + "] ";
    if (!d.verdict.accepted) s += d.verdict.summary();
    for (const auto& m : d.missing) {
      if (!d.verdict.accepted) s += "; ";
      s += "no accepted derivation of `" + m + "`";
    }
  };
  describe("1->2", dir_1to2);
  describe("2->1", dir_2to1);
  return s;
}

EquivalenceVerdict check_equivalence_task(const mg::Program& p1, const mg::Program& p2,
                                          const ProofScript& proof_1to2,
                                          const ProofScript& proof_2to1,
                                          const CheckOptions& opts) {
  std::vector<fo::FOFormulaPtr> nu1 = nu::nu_program(p1);
  std::vector<fo::FOFormulaPtr> nu2 = nu::nu_program(p2);

  EquivalenceVerdict verdict;
  verdict.dir_1to2 = check_direction(nu1, nu2, proof_1to2, opts);
  verdict.dir_2to1 = check_direction(nu2, nu1, proof_2to1, opts);
  verdict.accepted = verdict.dir_1to2.ok() && verdict.dir_2to1.ok();
  verdict.uses_trusted_arithmetic = verdict.dir_1to2.verdict.uses_trusted_arithmetic ||
                                    verdict.dir_2to1.verdict.uses_trusted_arithmetic;
  return verdict;
}

}  // namespace hta::kernel
