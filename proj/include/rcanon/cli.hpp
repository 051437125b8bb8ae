#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcanon {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitInequivalent = 3 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rcanon
