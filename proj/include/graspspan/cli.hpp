#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graspspan::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDomainFailure = 1,  // infeasible fit, validation failure, missing grasp set
  kUsageError = 2,
  kIoError = 3,  // unreadable file or unparsable document
};

/// Runs the graspspan command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graspspan::cli
