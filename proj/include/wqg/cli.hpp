#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqg {

/// Runs the wqg command line with args excluding the program name.
/// "-" as a path means in (reading) or out (writing).
/// Exit codes: 0 pass, 1 axiom failure or library error, 2 usage, parse or schema error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace wqg
