#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return ffpair::cli::run(argc, argv, std::cout, std::cerr); }
