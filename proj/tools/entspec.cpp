#include <iostream>

#include "entspec/cli.hpp"

int main(int argc, char** argv) { return entspec::run_cli(argc, argv, std::cout, std::cerr); }
