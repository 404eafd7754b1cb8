#include <iostream>

#include "quadgait/cli.hpp"

int main(int argc, char** argv) { return quadgait::run_cli(argc, argv, std::cout, std::cerr); }
