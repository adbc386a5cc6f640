#include <iostream>

#include "vinozeta/cli.hpp"

int main(int argc, char** argv) { return vinozeta::cli::run(argc, argv, std::cout, std::cerr); }
