#ifndef QRANK_CLI_HPP
#define QRANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qrank {

/// Parsed command-line request.
struct CliConfig {
    std::string subcommand;
    std::string verify_target = "all";
    long nmax = 30;
    long marks = 0;
    long modulus = 0;
    long divisor = 1;
    std::string backend = "both";
    std::string format; // csv|json|text; default depends on subcommand
    std::string out;    // empty = stdout
    bool force = false;
};

/// Run the command line: writes tables or reports, returns the process
/// exit code (0 success, 1 check/backend failure with witnesses emitted,
/// 2 usage error).  All diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qrank

#endif
