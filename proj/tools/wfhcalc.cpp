#include <iostream>
#include <string>
#include <vector>

#include "wfh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wfh::run_cli(args, std::cout, std::cerr);
}
