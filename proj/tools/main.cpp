#include <iostream>
#include <string>
#include <vector>

#include "macias/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return macias::cli::run(args, std::cout, std::cerr);
}
