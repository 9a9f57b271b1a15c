#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracstab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kStable = 0,
  kOk = 0,
  kUnstable = 1,
  kUsage = 2,
  kIndeterminate = 3,
};

/// Runs one command line (args excludes the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracstab::cli
