#include <iostream>

#include "alex/cli.hpp"

int main(int argc, char** argv) { return alex::cli::run(argc, argv, std::cout, std::cerr); }
