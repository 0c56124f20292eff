#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fournet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `fournet` tool. `args` excludes the program name.
// Subcommands: decide, simulate, analyze, compare, frontier.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace fournet::cli
