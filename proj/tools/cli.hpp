#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegasub::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2, kResourceError = 3 };

// Runs one command line (args excludes the program name). Reports go to `out`,
// diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegasub::cli
