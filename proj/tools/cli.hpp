#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpspec::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalError = 3,
  kInfeasible = 4,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// files or `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpspec::cli
