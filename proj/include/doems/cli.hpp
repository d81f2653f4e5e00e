#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doems {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 domain error, 2 internal inconsistency or failed theorem verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doems
