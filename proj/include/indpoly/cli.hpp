#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kUsage = 2,
  kConsistency = 3,
};

/// Runs one hscount invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indpoly::cli
