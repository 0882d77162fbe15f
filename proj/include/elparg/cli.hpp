// Command-line front end. Exit codes: 0 success, 1 a checked property
// failed, 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elparg {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elparg
