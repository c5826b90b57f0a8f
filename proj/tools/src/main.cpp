#include <iostream>

#include "colorgates/cli.hpp"

int main(int argc, char** argv) { return colorgates::cli::run(argc, argv, std::cout, std::cerr); }
