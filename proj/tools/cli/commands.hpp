#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropsd::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitMember = 0;
inline constexpr int kExitNonMember = 1;
inline constexpr int kExitUsage = 2;

// Runs the tropsd command line. args[0] is the program name. Matrix input is
// read from the named file, or from `in` when the path is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropsd::cli
