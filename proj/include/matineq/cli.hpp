#pragma once

// Command-line front end: verify, sharpness, hunt and list.

#include <ostream>
#include <string>
#include <vector>

namespace matineq {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2 };

/// args excludes the program name. Reports go to --out when given and to
/// `out` otherwise; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace matineq
