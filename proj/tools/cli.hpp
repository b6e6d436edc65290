#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wps::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one invocation of the `wps` tool. `args` excludes the program name.
/// Results go to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wps::cli
