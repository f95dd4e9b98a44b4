#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordalkit {

// Command-line front end; returns the process exit code.
// 0 = completed, 1 = property violation found, 2 = input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chordalkit
