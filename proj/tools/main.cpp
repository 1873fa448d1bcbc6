#include <iostream>

#include "nsmac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nsmac::run(args, std::cout, std::cerr);
}
