#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quintic::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConvergence = 3,
  kCertification = 4,
};

/// Runs one `quintic` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
