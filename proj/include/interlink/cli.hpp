#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlink::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kConsistencyFailure = 2,
  kIoFailure = 3,
};

// Runs the command line `args` (without the program name). Documents go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rounds to 15 significant digits so printed documents are stable.
double round15(double x);

}  // namespace interlink::cli
