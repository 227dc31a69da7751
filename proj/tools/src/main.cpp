#include <iostream>

#include "chordal_cli/cli.hpp"

int main(int argc, char** argv) {
  return chordal::run_cli(argc, argv, std::cout, std::cerr);
}
