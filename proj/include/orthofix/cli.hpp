#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthofix {

inline constexpr int exit_success = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code: 0 when every check passed or the solve converged,
/// 1 when a verification failed or the solve did not converge, 2 on input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orthofix
