#pragma once

#include <ostream>

namespace riskprio::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kParseError = 2,
    kValidationError = 3,
    kRuntimeError = 4,
};

// Entry point for the `riskprio` command. Subcommands: plan, simulate,
// prioritize, matrix, compare. Results go to `out` (or --output), diagnostics
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riskprio::cli
