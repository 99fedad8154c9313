#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirdet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Results go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirdet
