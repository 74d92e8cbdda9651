#include <iostream>

#include "evalcode/cli.hpp"

int main(int argc, char** argv) { return evalcode::run_cli(argc, argv, std::cout, std::cerr); }
