#include <iostream>

#include "gpdx/cli.hpp"

int main(int argc, char** argv) {
  return gpdx::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
