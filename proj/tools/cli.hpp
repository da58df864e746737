#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dar::cli {

// Exit codes.
inline constexpr int exit_ok = 0;         // conclusive result
inline constexpr int exit_error = 1;      // bad input, or a failed acceptance criterion
inline constexpr int exit_inconclusive = 2;  // search budget exhausted

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dar::cli
