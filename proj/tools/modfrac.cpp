#include <iostream>

#include "modfrac/cli.hpp"

int main(int argc, char** argv) {
  return modfrac::cli::run(argc, argv, std::cout, std::cerr);
}
