#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitary {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Runs one command. `args` excludes the program name. Payload goes to `out`
/// (or to --out FILE), diagnostics to `err`. Returns the process exit status.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace unitary
