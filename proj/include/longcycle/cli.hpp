#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "longcycle/error.hpp"

namespace longcycle::cli {

// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,         // success, or the checked property holds
    kPropertyFails = 1,   // e.g. not essentially 4-connected, certificate does not hold
    kUsageError = 2,      // bad arguments, unreadable or malformed input
    kInternalError = 3,   // a broken internal invariant
};

int exit_code_for(ErrorCode code);

// args excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace longcycle::cli
