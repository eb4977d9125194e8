#include <iostream>

#include "rummy/cli.hpp"

int main(int argc, char** argv) { return rummy::cli::run(argc, argv, std::cout, std::cerr); }
