#include <iostream>

#include "trivalent/cli.hpp"

int main(int argc, char** argv) { return trivalent::run_cli(argc, argv, std::cout, std::cerr); }
