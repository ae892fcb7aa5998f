#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infosel {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitGuaranteeRefused = 3,
};

/// Runs the command-line tool on `args` (program name excluded). Data goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infosel
