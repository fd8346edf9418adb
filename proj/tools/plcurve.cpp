#include <iostream>

#include "plcurve/cli/commands.hpp"

int main(int argc, char** argv) { return plcurve::cli::run_cli(argc, argv, std::cout, std::cerr); }
