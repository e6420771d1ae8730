#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numev::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kPrecondition = 3,
    kViolation = 4,
    kInconclusive = 5,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numev::cli
