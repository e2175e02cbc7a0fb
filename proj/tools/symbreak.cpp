#include <iostream>

#include "symbreak/cli.hpp"

int main(int argc, char** argv) { return symbreak::run_cli(argc, argv, std::cout, std::cerr); }
