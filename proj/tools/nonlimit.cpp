#include <iostream>

#include "nonlimit/cli.hpp"

int main(int argc, char** argv) { return nonlimit::cli::run(argc, argv, std::cout, std::cerr); }
