#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqrisk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Command-line entry point. `args` includes the program name. Results go
/// to `out`, diagnostics to `err`; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqrisk
