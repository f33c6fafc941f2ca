#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ancc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     ///< bad arguments or out-of-domain parameter
  kIoError = 2,   ///< unreadable or malformed input, unwritable output
  kInternal = 3,  ///< e.g. label overflow with 16-bit labels
};

/// Runs the segmentation command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ancc::cli
