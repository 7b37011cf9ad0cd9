#ifndef GNOE_TOOLS_CLI_HPP
#define GNOE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gnoe::cli {

/// Exit codes: 0 success, 1 computation error, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line; args excludes the program name.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnoe::cli

#endif  // GNOE_TOOLS_CLI_HPP
