#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl {

// Runs the command line surface; returns the process exit code.
// 0 = all checks pass, 1 = identity/basis failure, 2 = configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dunkl
