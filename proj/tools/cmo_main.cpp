#include <iostream>

#include "cmo/cli.hpp"

int main(int argc, char** argv) { return cmo::cli::run(argc, argv, std::cout, std::cerr); }
