#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridkrige::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,     ///< bad flags, unreadable or invalid input
  kNumericalError = 3, ///< singular system
};

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --output redirects them; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridkrige::cli
