#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphrhs::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
  kConsistencyError = 4,
};

/// Runs the command line `args` (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphrhs::cli
