#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jaco::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kCapExceeded = 3,
};

/// Values normally taken from the process environment.
struct Environment {
    std::optional<std::string> cap_eps;  // JACO_CAP_EPS
};

/// Runs one command line (args excludes the program name). Results go to out,
/// diagnostics and usage text to err; "-" as a path reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace jaco::cli
