#include <iostream>

#include "orb/cli.hpp"

int main(int argc, char** argv) { return orb::run_cli(argc, argv, std::cout, std::cerr); }
