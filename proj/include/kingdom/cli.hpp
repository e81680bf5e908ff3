#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kingdom {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification or equivalence failure
  kExitUsage = 2,    // bad arguments or board strings
  kExitGuard = 3,    // size guard exceeded or operation unsupported
};

/// Runs the command-line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kingdom
