#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msum {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // well-formed input, mathematically negative outcome
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msum
