#include <iostream>

#include "capillary/cli.hpp"

int main(int argc, char** argv) { return capillary::cli::run(argc, argv, std::cout, std::cerr); }
