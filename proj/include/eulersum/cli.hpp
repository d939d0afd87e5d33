#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersum::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNotConvergent = 2;
inline constexpr int kInfiniteSummand = 3;
inline constexpr int kMismatch = 4;

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. EULERSUM_DIGITS overrides the default of
/// 100 digits.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersum::cli
