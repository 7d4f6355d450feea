#include <iostream>

#include "numsemi/cli.hpp"

int main(int argc, char** argv) {
    return numsemi::cli::run(argc, argv, std::cout, std::cerr);
}
