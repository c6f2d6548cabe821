#ifndef MLHARM_CLI_APP_HPP
#define MLHARM_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mlharm::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,          // success, member or boundary, verification passed
  kExitViolation = 1,   // violator or verification failure
  kExitUsage = 2,       // usage or configuration error
  kExitNumerical = 3,   // no convergence, pole, non-positive weight, degenerate sample
};

/// Runs one invocation. `args` excludes the program name. Normal output goes to
/// `out` unless --out is given; diagnostics go to `err`. Nothing is written to
/// `out` (or the --out file) unless the whole run succeeds in producing a result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlharm::cli

#endif  // MLHARM_CLI_APP_HPP
