#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace geotail::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kUsage = 2,
  kDomain = 3,
};

/// Runs one command line (without the program name): bound, exact, mc,
/// sweep or verify. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geotail::cli
