#include <iostream>

#include "phenylene/cli.hpp"

int main(int argc, char** argv) {
  return phenylene::cli::run(argc, argv, std::cout, std::cerr);
}
