#include "reglab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return reglab::cli::run(argc, argv, std::cout, std::cerr); }
