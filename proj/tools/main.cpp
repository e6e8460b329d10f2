#include <iostream>
#include <string>
#include <vector>

#include "levelga/harness/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return levelga::harness::cli_dispatch(args, std::cout, std::cerr);
}
