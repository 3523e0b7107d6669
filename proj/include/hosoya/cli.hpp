#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hosoya::cli {

// Exit codes of the `hosoya` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (arguments without the program name).
///
///   hosoya triangle ROWS [--seed A B] [--format text|json|csv]
///   hosoya matrix FAMILY PARAMS... [--seed A B] [--mod P] [--format text|json|csv]
///   hosoya eigen FAMILY PARAMS... [--seed A B] [--format text|json]
///   hosoya verify IDENTITY [--max-n N] [--max-t N] [--detail] [--format text|json]
///   hosoya graph N [--check] [--format text|json|dot]
///
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hosoya::cli
