#include <iostream>

#include "crisisopt/cli.hpp"

int main(int argc, char** argv) { return crisis::cli::run(argc, argv, std::cout, std::cerr); }
