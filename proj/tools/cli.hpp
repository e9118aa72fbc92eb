#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayley::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kYes = 0, kNo = 1, kFailure = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
