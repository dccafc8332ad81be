#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icx::cli {

enum ExitCode : int { ok = 0, counterexamples = 1, usage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icx::cli
