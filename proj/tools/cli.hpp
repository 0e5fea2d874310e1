#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rwl::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 on success, 1 on a domain error or failed verification, 2 on usage
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rwl::cli
