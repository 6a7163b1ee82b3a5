#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadfrob::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kMismatch = 3,
};

// Parses and runs one command line (args excludes the program name).
// Everything the command prints goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfrob::cli
