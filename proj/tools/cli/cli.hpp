#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kleinian::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 pass, 1 mathematical mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kleinian::cli
