// Command-line front end. Exit codes: 0 pass / found / feasible,
// 1 fail / none / infeasible, 2 budget exceeded or usage error.

#ifndef COINWEIGH_CLI_HPP
#define COINWEIGH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coinweigh::cli {

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace coinweigh::cli

#endif
