#ifndef PHX_TOOLS_CLI_HPP
#define PHX_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace phx::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace phx::cli

#endif
