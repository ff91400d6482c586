#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grc {

// Runs the command-line interface against the given argument list (without
// the program name). Exit codes: 0 clean, 1 ejecting step or law failure,
// 2 invalid input or usage.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grc
