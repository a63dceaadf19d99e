#include <iostream>

#include "rotsurf/cli.hpp"

int main(int argc, char** argv) {
    return rotsurf::run_cli(argc, argv, std::cout, std::cerr);
}
