#include <iostream>

#include "hcent/cli.hpp"

int main(int argc, char** argv) { return hcent::cli::run(argc, argv, std::cout, std::cerr); }
