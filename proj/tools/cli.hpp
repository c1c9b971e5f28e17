#ifndef MCG_CLI_HPP
#define MCG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mcg {

/// Runs the command line with the given arguments (argv[0] excluded).
/// Exit status: 0 success, 2 invalid parameters, 3 budget exceeded,
/// 1 internal error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mcg

#endif
