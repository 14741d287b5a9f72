#include <iostream>

#include "cartanlab/cli.hpp"

int main(int argc, char** argv) { return cartanlab::cli::run(argc, argv, std::cout, std::cerr); }
