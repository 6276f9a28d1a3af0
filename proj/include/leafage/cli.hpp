#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leafage {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,     // not chordal, no certificate, reduction claim failed
  kExitUsage = 2,        // bad flags, unreadable or malformed input, precondition failure
  kExitOracleLimit = 3,  // clique-tree enumeration cap exceeded
  kExitInternal = 4,     // an algorithmic invariant failed
};

/// Runs the `leafage` tool on `args` (without the program name). The input
/// path `-` reads from `in`. LEAFAGE_ORACLE_LIMIT overrides the default
/// enumeration cap; an explicit --limit overrides both.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace leafage
