#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdgas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs one subcommand. `args` excludes the program name. JSON (default) or
/// CSV goes to `out` unless --output names a file, which is then written
/// whole at completion; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdgas::cli
