#pragma once

#include <string>
#include <vector>

namespace vinberg {

struct CliResult {
  int exit_code = 0;
  std::string output;
};

// Full command surface behind a testable seam; main() forwards argv and
// prints the result. Exit codes: 0 definite, 1 input error, 2 inconclusive.
CliResult dispatch(const std::vector<std::string>& args);

extern const char* kToolVersion;

}  // namespace vinberg
