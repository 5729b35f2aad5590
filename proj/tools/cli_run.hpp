#pragma once

#include <ostream>
#include <string>
#include <vector>

/// Entry point of the pentacover CLI, separated from main() so tests can
/// drive it in-process.  Returns the process exit code: 0 success,
/// 1 verification failure, 2 usage error.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);
