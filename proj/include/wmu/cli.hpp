#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wmu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLimit = 2;

// Runs one command line (without the program name). Subcommands: trace, chi,
// classes, incompressible, scl, wg, verify-mc.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmu::cli
