#pragma once

#include <iosfwd>

namespace quandlekit {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,          // success, or "isomorphic" for iso
  exit_negative = 1,    // iso: not isomorphic
  exit_usage = 2,
  exit_invalid = 3,     // parse, axiom or verification failure
  exit_bound = 4,       // a configured enumeration bound was exceeded
};

// The quandlekit command line. Writes results to out and one-line
// diagnostics to err; returns the exit status.
int run_cli(int argc, char const* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace quandlekit
