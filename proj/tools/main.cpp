#include <iostream>

#include "ccg/cli.hpp"

int main(int argc, char** argv) { return ccg::cli::run(argc, argv, std::cout, std::cerr); }
