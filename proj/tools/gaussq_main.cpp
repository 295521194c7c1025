#include <iostream>

#include "gaussq/cli.hpp"

int main(int argc, char** argv) { return gaussq::cli::run(argc, argv, std::cout, std::cerr); }
