#include <iostream>

#include "f2coh/cli.hpp"

int main(int argc, char** argv) { return f2coh::run(argc, argv, std::cout, std::cerr); }
