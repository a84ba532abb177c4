#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossprod {

// Exit codes of run_command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation. `args` excludes the program name. Reports go to
// `out` one item per line ("ITEM <name>: PASS" / "ITEM <name>: FAIL at <w>");
// diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossprod
