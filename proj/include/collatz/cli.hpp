#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collatz::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,        // bad flags, domain violations (x1 = 0, m < 2, lo > hi)
    kComputationError = 3,  // OrbitTooShort, inconclusive probe, failed self-check
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or to --out PATH) and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
