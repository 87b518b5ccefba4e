#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

// Runs the command-line tool on the given arguments (program name excluded),
// writing regular output to `out` and error objects to `err`.  Returns the
// process exit code: 0 on success, 1 on any domain or usage error.  All
// output for a fixed input is byte-identical across runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
