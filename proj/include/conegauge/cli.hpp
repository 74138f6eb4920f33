#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conegauge::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Command output
/// goes to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conegauge::cli
