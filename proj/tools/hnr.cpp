#include <iostream>

#include "hnr/cli.hpp"

int main(int argc, char** argv) { return hnr::run(argc, argv, std::cout, std::cerr); }
