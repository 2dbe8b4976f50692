#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dqeig::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // verify rejected the eigenpair, or an internal error
  kMaxIter = 2,
  kBreakdown = 3,
  kInputError = 4,
};

/// Runs one command line. args[0] is the program name. Results go to `out`,
/// machine-readable errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqeig::cli
