#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace siacp::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siacp::cli
