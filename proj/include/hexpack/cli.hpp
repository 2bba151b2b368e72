#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexpack::cli {

/// Runs one CLI invocation. `args` excludes the program name. The requested
/// document goes to `out`; diagnostics go to `err`. Returns the process exit
/// code: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexpack::cli
