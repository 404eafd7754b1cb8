#pragma once

#include <iosfwd>

namespace quadgait {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitConfig = 2,
  kExitInfeasible = 3,
};

/// Entry point of the `quadgait` tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadgait
