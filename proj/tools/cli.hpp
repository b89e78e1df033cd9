#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieomega::cli {

enum ExitCode : int { kOk = 0, kNontrivial = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieomega::cli
