#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cocycle_forge::cli {

/// Exit codes of the command line tool.
enum Exit : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless `--out <path>` names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cocycle_forge::cli
