#pragma once

#include <istream>
#include <string>
#include <vector>

namespace qfg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotPrime = 1,
  kUnknown = 2,
  kUsage = 64,
  kData = 65,
};

struct RunResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). The polynomial is read
/// from `in` when not given as an argument.
RunResult run(const std::vector<std::string>& args, std::istream* in = nullptr);

}  // namespace qfg::cli
