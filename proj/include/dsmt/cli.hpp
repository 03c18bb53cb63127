#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dsmt::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kDomain = 3,
};

/// Runs one command line (args[0] is the program name). Regular output goes
/// to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace dsmt::cli
