#include <iostream>

#include "wsinterp/cli.hpp"

int main(int argc, char** argv) { return wsinterp::cli::run(argc, argv, std::cout, std::cerr); }
