#include "charvar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return charvar::cli::run(argc, argv, std::cout, std::cerr); }
