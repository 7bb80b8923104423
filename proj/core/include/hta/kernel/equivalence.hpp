#pragma once

#include "hta/kernel/checker.hpp"
#include "hta/mg/ast.hpp"

namespace hta::kernel {

// One direction of an equivalence task: the script must be accepted, and
// for every sentence of the target translation some accepted line must
// conclude it from assumptions drawn from the source translation.
struct DirectionReport {
  Verdict verdict;
  std::vector<std::string> proved;   // covered target sentences (text)
  std::vector<std::string> missing;  // uncovered target sentences (text)

  bool ok() const { return verdict.accepted && missing.empty(); }
};

struct EquivalenceVerdict {
  bool accepted = false;
  DirectionReport dir_1to2;
  DirectionReport dir_2to1;
  bool uses_trusted_arithmetic = false;

  std::string summary() const;
};

// Goals are generated from the translations of the two programs; the
// scripts certify derivability in each direction.  Throws TranslationError
// if either program fails to translate.
EquivalenceVerdict check_equivalence_task(const mg::Program& p1, const mg::Program& p2,
                                          const ProofScript& proof_1to2,
                                          const ProofScript& proof_2to1,
                                          const CheckOptions& opts = {});

}  // namespace hta::kernel
