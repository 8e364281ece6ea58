#pragma once

// Command-line entry point, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace domdim {

/// Exit codes: 0 computed / pass, 1 check failed, 2 input error, 3 budget or
/// unsupported, 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domdim
