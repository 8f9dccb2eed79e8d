#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

/// Exit codes; docs/graph-format.md lists them for users.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageOrParse = 2,
  kHypothesis = 3,
  kCertificate = 4,
  kBudget = 5,
  kOutOfRange = 6,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
