#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satake {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitConfig = 2, kExitMath = 3 };

/// Runs one command line (without the program name). Tables and reports go
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satake
