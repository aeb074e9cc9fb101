#include <iostream>

#include "pfcone/cli.hpp"

int main(int argc, char** argv) { return pfcone::cli::run(argc, argv, std::cout, std::cerr); }
