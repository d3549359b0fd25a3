#include "crosscap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return crosscap::run_cli(argc, argv, std::cout, std::cerr); }
