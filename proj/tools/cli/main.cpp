#include "solfold_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return solfold::cli::run_app(argc, argv, std::cout, std::cerr); }
