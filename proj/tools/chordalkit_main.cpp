#include <iostream>
#include <vector>

#include "chordalkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chordalkit::run_cli(args, std::cout, std::cerr);
}
