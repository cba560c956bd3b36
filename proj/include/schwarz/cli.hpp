#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schwarz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kNumericError = 3 };

// Runs one subcommand. `args` excludes the program name. Reports go to `out`
// (or --out); diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schwarz::cli
