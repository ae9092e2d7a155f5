#ifndef DISCKIT_CLI_HPP_
#define DISCKIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace disckit::cli {

/* Schema identifier stamped into every JSON envelope. */
inline constexpr const char* kSchemaId = "disckit/v1";

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kRingError = 3,
    kBudgetError = 4,
    kInternalError = 5,
};

/* Runs one subcommand; `args` excludes the program name. Results go to
 * `out`, diagnostics to `err`. Returns the process exit code. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disckit::cli

#endif  // DISCKIT_CLI_HPP_
