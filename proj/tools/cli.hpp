#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fishcheck::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kNumericFailure = 3 };

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fishcheck::cli
