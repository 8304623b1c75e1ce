#pragma once

#include <string>
#include <vector>

namespace ribet {

/// Runs the command line given argv-style arguments (args[0] is the
/// program name). Returns the process exit code: 0 on success/pass,
/// 1 on verification failure, 2 on usage or input error.
int cli_run(const std::vector<std::string>& args);

} // namespace ribet
