#include <iostream>

#include "seqfam/cli.hpp"

int main(int argc, char** argv) {
  return seqfam::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
