#pragma once

#include <string>

namespace hta::tools {

// Runs the bundled showcase: translation goldens, proof certifications,
// oracle checks, and the ground-level regressions.  Prints one PASS/FAIL
// line per case; returns 0 iff all cases pass.
int run_demo(const std::string& corpus_dir);

}  // namespace hta::tools
