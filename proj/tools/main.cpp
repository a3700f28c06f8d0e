#include "smaaffsh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return smaaffsh::run_cli(argc, argv, std::cout, std::cerr); }
