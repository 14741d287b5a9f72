#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cartanlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,            ///< success, or a search that found a hit
  kUsage = 2,         ///< parse or validation error
  kExhausted = 3,     ///< search finished without a hit
  kFailed = 4,        ///< a verification claim failed
  kInconsistent = 5,  ///< two independent computations disagreed
};

/// Run the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cartanlab::cli
