#include <iostream>

#include "envelope/cli.hpp"

int main(int argc, char** argv) { return envelope::run_cli(argc, argv, std::cout, std::cerr); }
