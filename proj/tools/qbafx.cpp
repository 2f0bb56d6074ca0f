#include <iostream>

#include "qbafx/cli.hpp"

int main(int argc, char** argv) { return qbafx::run_cli(argc, argv, std::cout, std::cerr); }
