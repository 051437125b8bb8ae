#include <iostream>

#include "rcanon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rcanon::run_cli(args, std::cout, std::cerr);
}
