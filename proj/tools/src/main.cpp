#include <iostream>

#include "frobcheck_cli/cli.hpp"

int main(int argc, char** argv) { return frobcheck::cli::run_cli(argc, argv, std::cout, std::cerr); }
