#include <iostream>

#include "toeplab_cli/app.hpp"

int main(int argc, char** argv) { return toeplab::cli::run(argc, argv, std::cout, std::cerr); }
