#include <iostream>

#include "plethysm/cli.hpp"

int main(int argc, char** argv) { return plethysm::cli::run(argc, argv, std::cout, std::cerr); }
