#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribone {

// Exit codes of the tribone command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_resource_limit = 3;

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribone
