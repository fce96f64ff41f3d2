#include <cstdlib>
#include <iostream>

#include "artmod/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return artmod::cli::run(args, std::cout, std::cerr, [](const char* name) { return std::getenv(name); });
}
