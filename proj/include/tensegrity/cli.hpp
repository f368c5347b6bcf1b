#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensegrity {

// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitRange = 3,
  kExitEmptyGrid = 4,
};

// Runs the command line given by args (args[0] is the program name). Tables go
// to --output files when given, otherwise to out; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensegrity
