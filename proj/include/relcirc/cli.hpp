#ifndef RELCIRC_CLI_HPP
#define RELCIRC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace relcirc::cli {

// Exit codes: 0 success/true verdict, 1 false verdict (eq/leq/check/axioms),
// 2 parse or sort error, 3 precondition violation.
int run(const std::vector<std::string>& args, std::ostream& out);

} // namespace relcirc::cli

#endif
