#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ksod {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitUnsupported = 2 };

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksod
