#include <iostream>

#include "sparsecc/cli.hpp"

int main(int argc, char** argv) {
  return sparsecc::cli::dispatch(argc, argv, std::cout, std::cerr);
}
