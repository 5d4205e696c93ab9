#pragma once

#include <cstdint>
#include <iosfwd>

namespace symcert::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kFallback = 2,
  kInvariantViolation = 3,
};

// Runs the command line against the given streams. Output files named by
// --output are written directly; everything else goes to `out`/`err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcert::cli
