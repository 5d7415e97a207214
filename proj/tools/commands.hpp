#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apolar::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseFailed = 2,
  kComputationFailed = 3,
  kUsage = 4,
};

/// Runs the tool on `args` (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli
