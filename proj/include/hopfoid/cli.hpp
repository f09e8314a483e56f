#pragma once

#include <string>
#include <vector>

namespace hopfoid {

struct CliResult {
    int exit_code = 0;   // 0 success, 1 failed check/domain error, 2 usage
    std::string out;
};

// Runs one command given argv-style arguments (without the program name).
// Pure aside from reading input files named by the arguments.
CliResult cli_run(std::vector<std::string> args);

}  // namespace hopfoid
