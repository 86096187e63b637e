#pragma once

// Command-line front end.  Kept as a library so tests can drive it with
// string streams.

#include <ostream>
#include <string>
#include <vector>

namespace semitop::cli {

  enum ExitCode : int {
    kSuccess          = 0,
    kAssertionFailure = 1,
    kUsageError       = 2,
    kResourceCap      = 3,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semitop::cli
