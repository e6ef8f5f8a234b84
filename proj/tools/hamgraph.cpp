#include <iostream>
#include <string>
#include <vector>

#include "hamgraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hamgraph::cli::run(args, std::cout, std::cerr);
}
