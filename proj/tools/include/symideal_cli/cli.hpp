#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symideal::cli {

/// Exit codes: 0 computed result (including not_member), 1 usage or parse
/// error, 2 violated mathematical precondition.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symideal::cli
