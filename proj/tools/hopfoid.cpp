#include <cstdio>
#include <string>
#include <vector>

#include "hopfoid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hopfoid::CliResult r = hopfoid::cli_run(std::move(args));
    std::fputs(r.out.c_str(), stdout);
    return r.exit_code;
}
