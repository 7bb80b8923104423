#pragma once

#include <string>

#include "hta/kernel/proof.hpp"

namespace hta::kernel {

// Proof-script JSON:
//   {
//     "declarations": [{"name": "N", "sort": "int"}, ...],
//     "lines": [
//       {"id": "1", "assumptions": ["formula", ...], "formula": "...",
//        "rule": "imp-e", "premises": ["3", "1"],
//        "hints": {"term": "...", "var": "V", "template": "..."}},
//       ...
//     ],
//     "goal": {"assumptions": [...], "formula": "..."}   // optional
//   }
// Rules: and-i, and-e-left, and-e-right, or-i-left, or-i-right, or-e,
// imp-i, imp-e, contradiction (c), weakening (w), forall-i, forall-e,
// exists-i, exists-e, eq-forward, eq-backward.
// Axioms: id, eq-refl, hosoi, groupB, groupC, groupD, groupD-trusted.
//
// Structural problems (bad JSON, missing fields, unparsable formulas) throw
// ScriptError; an unknown rule name is kept and rejected by the checker at
// that line.
ProofScript parse_script_text(const std::string& json_text);
ProofScript parse_script_file(const std::string& path);

}  // namespace hta::kernel
