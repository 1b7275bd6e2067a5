#include <iostream>
#include <vector>

#include "knotaug/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return knotaug::run_cli(args, std::cout, std::cerr);
}
