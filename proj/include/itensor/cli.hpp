#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace itensor {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitHolds = 0, kExitFails = 1, kExitInconclusive = 2, kExitError = 3 };

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (unless --output names a file), human summaries and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itensor
