#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgt {

/// Runs the command-line front end. Exit codes: 0 success / verdict true /
/// AntiFD; 1 verdict false / ProFD; 2 inconclusive or unknown; 3 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgt
