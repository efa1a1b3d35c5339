#include <cstdio>
#include <string>
#include <vector>

#include "vinberg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  vinberg::CliResult result = vinberg::dispatch(args);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
