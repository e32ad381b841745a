#include <iostream>
#include <string>
#include <vector>

#include "pellfrac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pellfrac::cli::run(args, std::cout, std::cerr);
}
