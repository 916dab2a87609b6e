#ifndef NCGB_CLI_HPP
#define NCGB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncgb {

/// Runs one command. Exit codes: 0 success, 1 usage or parse error,
/// 2 completion stopped at a configured bound (partial results are still
/// printed), 3 infinite quotient where finiteness was required.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncgb

#endif
