#pragma once

#include <iosfwd>

namespace modfrac::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kUsage = 2,
  kInternal = 3,
  kCeiling = 4,
};

/// Entry point of the `modfrac` tool, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace modfrac::cli
