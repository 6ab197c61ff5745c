#include <iostream>

#include "banbury/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return banbury::cli::run(args, std::cout, std::cerr);
}
