#pragma once

#include <ostream>

namespace multinet {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,        // success or affirmative verdict
  kExitNegative = 1,  // negative verdict
  kExitInput = 2,     // bad input or parameters
  kExitIO = 3,
};

/// Runs the multinet command line with the given arguments, writing reports
/// to `out` and diagnostics to `err`. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multinet
