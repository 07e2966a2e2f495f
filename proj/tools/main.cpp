#include <iostream>

#include "statmon/cli.hpp"

int main(int argc, char** argv) { return statmon::run_cli(argc, argv, std::cout, std::cerr); }
