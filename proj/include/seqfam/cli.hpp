#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqfam {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
};

/// Runs one subcommand (generate, family, correlate, count, verify).
/// `args` excludes the program name. Reports go to `out`, diagnostics to
/// `err`; --out redirects reports to files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqfam
