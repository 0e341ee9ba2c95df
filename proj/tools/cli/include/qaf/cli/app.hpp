#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaf::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kInconsistency = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaf::cli
