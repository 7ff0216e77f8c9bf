#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bck::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kMathFailure = 1,
  kParseFailure = 2,
  kGuardExceeded = 3,
};

/// Runs `bck <args...>` (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bck::cli
