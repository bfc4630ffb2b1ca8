#include <iostream>

#include "lagcorr/cli.hpp"

int main(int argc, char** argv) { return lagcorr::run_cli(argc, argv, std::cout, std::cerr); }
