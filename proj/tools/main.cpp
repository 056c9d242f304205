#include <iostream>
#include <string>
#include <vector>

#include "subcorona/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return subcorona::run(args, std::cout, std::cerr);
}
