#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tracecert::cli {

enum ExitCode : int { kVerified = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line. argv[0] is the program name. Results go to `out`
/// (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tracecert::cli
