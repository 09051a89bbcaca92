#include "danilov/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return danilov::run_cli(argc, argv, std::cout, std::cerr);
}
