#include <iostream>

#include "gsp/cli.hpp"

int main(int argc, char** argv) {
    return gsp::cli::run(argc, argv, std::cout, std::cerr);
}
