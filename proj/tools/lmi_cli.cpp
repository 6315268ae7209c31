#include <iostream>

#include "lmi/cli.hpp"

int main(int argc, char** argv) { return lmi::cli::run(argc, argv, std::cout, std::cerr); }
