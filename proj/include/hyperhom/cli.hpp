#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hyperhom::cli {

enum ExitCode : int {
  kSuccess = 0,        // success, or a positive verdict
  kNegative = 1,       // valid but negative result; also unreadable or invalid input
  kUsage = 2,          // unknown subcommand, flag or example name
  kLimitExceeded = 3,  // integer tree search stopped before exhausting candidates
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperhom::cli
