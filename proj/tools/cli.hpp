#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace favard {

/// Runs the command line `args` (without the program name) and returns the
/// process exit code: 0 ok, 2 validation, 3 resource, 4 numeric.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace favard
