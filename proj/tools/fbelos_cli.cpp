#include <iostream>

#include "fbelos/cli.hpp"

int main(int argc, char** argv) { return fbelos::cli::main(argc, argv, std::cout, std::cerr); }
