#ifndef HAHN_TOOLS_CLI_HPP
#define HAHN_TOOLS_CLI_HPP

#include <iosfwd>

namespace hahn::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kSectionFailure = 3,
  kIterationLimit = 4,
  kSolverError = 5,
};

/// Runs one command line; all output goes to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hahn::cli

#endif  // HAHN_TOOLS_CLI_HPP
