#include "qflag_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qflag::cli::run(argc, argv, std::cout, std::cerr); }
