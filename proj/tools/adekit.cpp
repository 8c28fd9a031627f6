#include <iostream>

#include "adekit/cli.hpp"

int main(int argc, char** argv) { return adekit::cli::run(argc, argv, std::cout, std::cerr); }
