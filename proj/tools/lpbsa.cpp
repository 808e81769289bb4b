#include <iostream>

#include "lpbsa/cli.hpp"

int main(int argc, char** argv) { return lpbsa::cli::run(argc, argv, std::cout, std::cerr); }
