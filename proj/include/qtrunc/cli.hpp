#pragma once

#include <iosfwd>

namespace qtrunc {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;  // verification failure or inequality violation
inline constexpr int kExitUsage = 2;

/// Entry point of the `qtrunc` command line tool; argv[0] is the program name.
/// Reports go to `out` (or the --output file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtrunc
