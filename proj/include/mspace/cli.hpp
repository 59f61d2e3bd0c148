#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mspace {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_counterexample = 1, exit_input_error = 2 };

/// Runs `mspace` with `args` (program name excluded). MSPACE_GRID is read
/// from the environment when --grid is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mspace
