#pragma once

#include <ostream>

namespace bqdirac {

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailure = 2;

/// Entry point of the bqdirac command line. Results go to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bqdirac
