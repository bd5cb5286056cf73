#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matdiv::cli {

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 success or true, 1 false / unsolvable / failed check, 2 usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace matdiv::cli
