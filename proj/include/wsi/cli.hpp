#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsi::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kConstraint = 2,
    kNonConvergence = 3,
    kOracleDeviation = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsi::cli
