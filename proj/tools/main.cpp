#include <iostream>

#include "qrtrig/cli.hpp"

int main(int argc, char** argv) { return qrtrig::cli::main(argc, argv, std::cout, std::cerr); }
