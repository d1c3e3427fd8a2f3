#ifndef UAN_CLI_HPP
#define UAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace uan::cli {

/// Exit codes: 0 success, 2 invalid input, 3 numerical failure,
/// 4 derivation violation detected by simulate.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, for driving the CLI from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace uan::cli

#endif
