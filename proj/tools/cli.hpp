#ifndef QUADRICS_TOOLS_CLI_HPP
#define QUADRICS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace quadrics::cli {

enum ExitCode : int { kOk = 0, kParse = 1, kInvalidConfig = 2, kSizeCap = 3, kOracleMismatch = 4 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadrics::cli

#endif  // QUADRICS_TOOLS_CLI_HPP
