#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairhaul {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitBudget = 2,
  kExitPredicate = 3,
};

/// Runs the tool on `args` (without the program name). JSON or CSV goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairhaul
