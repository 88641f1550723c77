#include <iostream>

#include "flagbound/cli.hpp"

int main(int argc, char** argv) { return flagbound::cli::main_entry(argc, argv, std::cout, std::cerr); }
