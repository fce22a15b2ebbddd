#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pachner::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInputError = 3,
  kInadmissible = 4,
  kUnknown = 5,
};

// Runs one command; args exclude the program name. Errors become a single
// `ERROR <code>: <message>` line on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pachner::cli
