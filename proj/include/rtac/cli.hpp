#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rtac::cli {

enum ExitCode : int { kOk = 0, kInconsistent = 1, kUsage = 2 };

/// Runs the command line given without the program name, e.g.
/// {"ac", "eq2.json", "--engine", "rtac"}. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtac::cli
