#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unram::cli {

// Exit codes: 0 success, 1 input error or failed check, 2 budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitBudget = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace unram::cli
