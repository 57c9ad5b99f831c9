#include <iostream>

#include "galegap/cli.hpp"

int main(int argc, char** argv) {
  return galegap::run_cli(argc, argv, std::cout, std::cerr);
}
