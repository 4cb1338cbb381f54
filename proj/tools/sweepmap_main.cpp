#include <iostream>

#include "sweepmap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sweepmap::cli::run(args, std::cin, std::cout, std::cerr);
}
