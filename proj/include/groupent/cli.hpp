#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupent {

/// Exit codes beyond the per-command verdict codes 0/1/2.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitFormat = 65;
inline constexpr int kExitDomain = 66;
inline constexpr int kExitPrecondition = 67;
inline constexpr int kExitInternal = 70;

/// Runs one CLI command. `args` excludes the program name. The report goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupent
