#include <iostream>

#include "elparg/cli.hpp"

int main(int argc, char** argv) { return elparg::run_cli(argc, argv, std::cout, std::cerr); }
