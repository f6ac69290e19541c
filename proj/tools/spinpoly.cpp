#include <iostream>

#include "spinpoly/commands.hpp"

int main(int argc, char** argv) { return spinpoly::run_cli(argc, argv, std::cout, std::cerr); }
