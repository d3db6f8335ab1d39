#include <iostream>

#include "cuttree/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return cuttree::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
