#include <iostream>
#include <vector>

#include "normcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return normcalc::run_cli(args, std::cout, std::cerr);
}
