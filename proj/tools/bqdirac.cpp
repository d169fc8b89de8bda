#include <iostream>

#include "bqdirac/cli.hpp"

int main(int argc, char** argv) { return bqdirac::run_cli(argc, argv, std::cout, std::cerr); }
