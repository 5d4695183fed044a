#include <iostream>

#include "mdim/cli.hpp"

int main(int argc, char** argv) { return mdim::cli::main(argc, argv, std::cout, std::cerr); }
