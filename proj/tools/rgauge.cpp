#include <iostream>

#include "rgauge/cli.hpp"

int main(int argc, char** argv) { return rgauge::cli::run_cli(argc, argv, std::cout, std::cerr); }
