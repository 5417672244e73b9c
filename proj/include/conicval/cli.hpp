#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conicval {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitMath = 1, kExitUsage = 2, kExitDisagreement = 3 };

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conicval
