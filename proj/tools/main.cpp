#include "ffrunner/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ffr::cli_run(argc, argv, std::cout, std::cerr); }
