#ifndef RIESZ_CLI_CLI_HPP
#define RIESZ_CLI_CLI_HPP

#include <ostream>

namespace riesz::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,
  kBadInput = 2,
  kBudgetExceeded = 3,
};

/// Entry point of `riesz-select`; writes results to `out` unless --output is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli

#endif  // RIESZ_CLI_CLI_HPP
