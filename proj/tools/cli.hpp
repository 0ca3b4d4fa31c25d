#ifndef SEMIBOUND_TOOLS_CLI_HPP_
#define SEMIBOUND_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace semibound::tools {

  // Process exit codes.
  enum ExitCode : int {
    exit_ok           = 0,
    exit_failure      = 1,  // usage or input error, or a bound that fails under --prime
    exit_reducible    = 2,
    exit_inconclusive = 3,
    exit_cap_exceeded = 4,
    exit_contradiction = 5,
  };

  // Runs the command line (args excludes the program name). Results go to
  // out, or to the --out file; diagnostics go to err.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semibound::tools

#endif  // SEMIBOUND_TOOLS_CLI_HPP_
