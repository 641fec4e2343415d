#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace popmatch {

// Runs one CLI invocation (args exclude the program name). Exit status 0 on
// success, 1 on verification failure, 2 on input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace popmatch
