#include <iostream>
#include <string>
#include <vector>

#include "relcirc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return relcirc::cli::run(args, std::cout);
}
