#include <iostream>

#include "ksod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ksod::run_cli(args, std::cout, std::cerr);
}
