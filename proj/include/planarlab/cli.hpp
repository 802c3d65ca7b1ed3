#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planarlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceGuard = 3;

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "PLANARLAB_WORKERS";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Writes results to `out` (or the --out file) and diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarlab::cli
