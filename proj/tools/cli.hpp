#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace endorsim::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kStalled = 2,  // search stopped above the threshold (stalled or out of budget)
  kValidation = 3,
  kIo = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endorsim::cli
