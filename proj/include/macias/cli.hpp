#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macias::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitVerified = 0;     // verified / true / success
inline constexpr int kExitRefuted = 1;      // refuted, witness printed
inline constexpr int kExitInconclusive = 2; // necessary checks passed only
inline constexpr int kExitUsage = 3;        // usage or spec error
inline constexpr int kExitDomain = 4;       // overflow or precondition

/// Dispatches a full argv (args[0] is the program name) and writes the
/// report to out, diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace macias::cli
