#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netcheap::cli {

// Environment variable overriding the exact-enumeration player guard.
inline constexpr const char* kGuardEnv = "NETCHEAP_MAX_PLAYERS";

// Runs one command. `args` excludes the program name. Results go to `out`;
// failures are written to `out` as {"error": {"code", "message"}}.
// Exit status: 0 success, 1 a reproduce/check target failed, 2 bad input,
// 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace netcheap::cli
