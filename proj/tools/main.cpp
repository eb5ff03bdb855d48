#include <iostream>
#include <vector>

#include "p3stab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p3stab::run_cli(args, std::cout, std::cerr);
}
