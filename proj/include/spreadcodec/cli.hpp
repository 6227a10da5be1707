#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spreadcodec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Command-line entry point: construct, encode, decode, verify, table-smooth, demo.
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spreadcodec
