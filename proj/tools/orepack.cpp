#include <iostream>
#include <string>
#include <vector>

#include "orepack/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return orepack::cli::run(args, std::cin, std::cout, std::cerr);
}
