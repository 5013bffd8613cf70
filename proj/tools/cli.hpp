#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holedim::cli {

/// Exit codes: 0 ok, 1 oracle mismatch in `check`, 2 usage or precondition
/// error.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name); data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 12 significant digits, the precision of every emitted number.
double round_significant(double x);

}  // namespace holedim::cli
