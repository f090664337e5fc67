#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratsub {

/// Exit codes: 0 success (or verdict true), 1 verdict false / failed self-test /
/// internal error, 2 bad input.
enum ExitCode { kExitOk = 0, kExitFalse = 1, kExitInput = 2 };

/// args[0] is the program name. Reports go to out as JSON, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratsub
