#pragma once

#include "hta/kernel/proof.hpp"

namespace hta::kernel {

// Validates every line against its justification and the goal against the
// last line.  All lines are checked (a bad line does not stop later
// checks); the verdict is accepted only if every line is valid and the
// goal, when present, matches.
Verdict check_proof(const ProofScript& script, const CheckOptions& opts = {});

}  // namespace hta::kernel
