#include <iostream>
#include <string>
#include <vector>

#include "chroma2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chroma2::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
