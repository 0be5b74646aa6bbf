#include <iostream>

#include "qbf/cli.hpp"

int main(int argc, char** argv) { return qbf::cli::run_cli(argc, argv, std::cout, std::cerr); }
