#include <iostream>
#include <vector>

#include "lpbench/cli.hpp"

int main(int argc, char** argv) {
    return lpbench::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                            std::cerr);
}
