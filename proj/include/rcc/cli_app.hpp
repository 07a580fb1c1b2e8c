#pragma once

// Command-line front end. Exposed as a function so tests can drive it
// in-process. Exit codes: 0 success, 2 unparseable arguments, 3 arguments
// out of supported range, 4 constraint balance violated, 5 computed table
// disagrees with the built-in reference values.

#include <string>
#include <vector>

namespace rcc {

int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // without program name

}  // namespace rcc
