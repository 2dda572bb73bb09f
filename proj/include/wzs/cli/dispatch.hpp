#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wzs::cli {

enum ExitCode : int {
  kOk = 0,
  kRefused = 1,       // input outside a theorem's hypotheses
  kInconclusive = 2,  // search budget ran out
  kInternal = 3,      // a construction or theorem check failed
  kUsage = 64,
};

/// Runs one `wzs` command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzs::cli
