#include <iostream>

#include "geodome/cli.hpp"

int main(int argc, char** argv) {
  return geodome::cli::run(argc, argv, std::cout, std::cerr);
}
