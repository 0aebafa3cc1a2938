#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tnnflag {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 2 parse or input error, 3 mismatch or failed oracle,
/// 4 result outside the nonnegative part.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tnnflag
