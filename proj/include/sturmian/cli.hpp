#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmian {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` or to --out, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmian
