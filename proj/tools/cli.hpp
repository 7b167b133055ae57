#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kunstweg::cli {

/// Process exit codes.
enum Exit : int {
  kSuccess = 0,
  /// A table error, row-difference gap, residual or geometric certificate is out of tolerance.
  kCheckFailed = 1,
  kUsage = 2,
  kNoConvergence = 3,
};

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless --out is given; diagnostics go to `err`. Relative --out and --svg
/// paths are resolved against $KUNSTWEG_OUTPUT_DIR when it is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kunstweg::cli
