#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace szego {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs one szego_lab command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szego
