#pragma once

#include <iosfwd>

namespace lpbsa::cli {

/// Exit codes returned by run().
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad arguments or parameter values
  kReplayFailure = 3, // script failed to parse or desynchronized
  kIoFailure = 4,     // unreadable input or unwritable output
};

/// Entry point of the lpbsa command line tool, with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpbsa::cli
