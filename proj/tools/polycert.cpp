#include "polycert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polycert::cli::run(argc, argv, std::cout, std::cerr); }
