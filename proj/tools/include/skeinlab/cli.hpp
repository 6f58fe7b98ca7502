#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skeinlab {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinlab
