#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfk {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_parse = 3 };

// Runs one hopfk command line (args excludes the program name). Reports go to
// out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfk
