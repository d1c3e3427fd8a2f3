#include "uan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return uan::cli::run(argc, argv, std::cout, std::cerr);
}
