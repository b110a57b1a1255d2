#pragma once

#include <iosfwd>

namespace baltree::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;   // bad flags, unreadable or malformed input
inline constexpr int kConfigError = 3;  // lambda out of range, unknown method, ...
inline constexpr int kPrecondition = 4; // instance rejected by the solver

/// Runs one subcommand: solve-median, solve-maxian, oracle, sweep, pareto,
/// gen, report. Human-readable output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace baltree::cli
