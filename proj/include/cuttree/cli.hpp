#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuttree {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing normal
/// output to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuttree
