#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcinterp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the command line (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal; integral values keep a trailing ".0" and
/// infinities print as "inf" / "-inf".
std::string format_number(double value);

}  // namespace arcinterp::cli
