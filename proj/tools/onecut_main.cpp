#include <iostream>

#include "onecut/cli.hpp"

int main(int argc, char** argv) {
    return onecut::cli::run(argc, argv, std::cout, std::cerr);
}
