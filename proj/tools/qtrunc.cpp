#include <iostream>

#include "qtrunc/cli.hpp"

int main(int argc, char** argv) { return qtrunc::run_cli(argc, argv, std::cout, std::cerr); }
