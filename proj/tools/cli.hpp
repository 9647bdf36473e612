#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trikernel::cli {

/// Runs one command line (program name excluded). Returns the process exit
/// code: 0 success, 1 domain error or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trikernel::cli
