#include <iostream>

#include "multinet/cli.hpp"

int main(int argc, char** argv) { return multinet::run_cli(argc, argv, std::cout, std::cerr); }
