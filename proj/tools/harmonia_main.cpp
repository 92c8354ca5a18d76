#include "harmonia/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return harmonia::run_cli(argc, argv, std::cout, std::cerr); }
