#include <iostream>

#include "commands.hpp"

int main(int argc, char **argv) { return ellcauchy::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
