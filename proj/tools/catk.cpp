#include <iostream>

#include "catk/cli.hpp"

int main(int argc, char** argv) { return catk::run_cli(argc, argv, std::cout, std::cerr); }
