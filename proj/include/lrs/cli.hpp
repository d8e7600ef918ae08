#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrs::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadInput = 2,
    kNotLinearlyRecurrent = 3,
    kOracleExhausted = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; a file argument of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lrs::cli
