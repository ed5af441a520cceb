#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace setadf::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // rejected signature, in-delta verdict, failed correspondence
  kUsage = 2,     // bad arguments, unreadable or unrepresentable input
  kInternal = 3,  // a guaranteed property failed
};

/// Runs one command. `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace setadf::cli
