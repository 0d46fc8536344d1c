#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpbench {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses argv (without the program name), dispatches to a subcommand and
/// returns the exit code: 0 on success, 1 for usage/configuration errors,
/// 2 for data or I/O errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace lpbench
