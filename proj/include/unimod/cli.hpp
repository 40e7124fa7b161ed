#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unimod {

inline constexpr int kExitInputError = 64;

/// Runs one subcommand (decide, bases, oracle, generate, blocks). `args`
/// excludes the program name. Graph input is read from the positional file
/// argument, or from `in` when it is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace unimod
