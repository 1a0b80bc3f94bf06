#include <iostream>

#include "eptas/cli.hpp"

int main(int argc, char** argv) { return eptas::cli::run(argc, argv, std::cout, std::cerr); }
