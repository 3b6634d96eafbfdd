#pragma once

#include <iosfwd>

namespace catk {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitNotMetric = 2,
  kExitFails = 3,
  kExitVacuous = 4,
  kExitUsage = 64,
};

// Entry point of the command-line tool; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catk
