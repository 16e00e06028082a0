#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfsim::cli {

// Exit codes: 0 success, 1 verdict contradicts --expect, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectation = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfsim::cli
