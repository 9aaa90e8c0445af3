#ifndef MZV_CLI_HPP
#define MZV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli

#endif  // MZV_CLI_HPP
