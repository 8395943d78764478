#pragma once

#include <iosfwd>

namespace simdim {

enum ExitCode : int { kExitOk = 0, kExitVerifyFail = 1, kExitInputError = 2, kExitBudget = 3 };

/// Entry point of the `simdim` tool. Results go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace simdim
