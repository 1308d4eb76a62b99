#include <iostream>

#include "hydrogen1d/cli.hpp"

int main(int argc, char** argv) { return hydrogen1d::run_cli(argc, argv, std::cout, std::cerr); }
