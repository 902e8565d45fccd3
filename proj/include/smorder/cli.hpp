#pragma once

#include <string>
#include <vector>

namespace smorder {

// Entry point behind the smorder binary.  Returns the process exit status:
// 0 success, 1 a verification or runtime failure, 2 a usage error.
int run_cli(int argc, const char* const* argv);

// Convenience for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace smorder
