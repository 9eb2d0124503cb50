#include <iostream>

#include "toeplitz/cli.hpp"

int main(int argc, char** argv) {
    return toeplitz::cli::run(argc, argv, std::cout, std::cerr);
}
