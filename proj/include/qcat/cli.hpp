#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcat {

/// Batch front end. `args` excludes the program name. Exit codes:
/// 0 success, 1 a verification assertion failed, 2 usage or parse error,
/// 3 a size guard was exceeded. The default output format is json unless
/// stdout is a terminal, in which case it is text.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            bool stdout_is_tty = false);

}  // namespace qcat
