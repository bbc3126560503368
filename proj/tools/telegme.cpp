#include <iostream>

#include "telegme/cli.hpp"

int main(int argc, char** argv) { return telegme::cli::main(argc, argv, std::cout, std::cerr); }
