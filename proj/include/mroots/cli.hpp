#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mroots::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // bad flags, unknown names, unmet method prerequisites
  kStepFailure = 2,  // solve: the very first step failed
  kIoFailure = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mroots::cli
