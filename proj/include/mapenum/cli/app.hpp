#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mapenum {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitShortfall = 3 };

/// Runs the CLI on args (args[0] is the program name), writing to out and err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapenum
