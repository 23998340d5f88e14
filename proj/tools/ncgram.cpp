#include <iostream>

#include "ncgram/cli.hpp"

int main(int argc, char** argv) { return ncgram::cli::run(argc, argv, std::cout, std::cerr); }
