#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecj::cli {

/// Runs the command line given as argv-style arguments (program name not
/// included). Returns the process exit status: 0 success, 1 usage error,
/// 2 program error, 3 resource guard tripped.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecj::cli
