#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newton_mv::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1, // property violated or verification did not pass
    kExitInputError = 2,
};

/// Runs one newton-mv invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace newton_mv::cli
