#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace avmod::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avmod::cli
