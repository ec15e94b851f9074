#include <iostream>

#include "skeinlab/cli.hpp"

int main(int argc, char** argv) {
  return skeinlab::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
