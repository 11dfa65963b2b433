#include <iostream>
#include <vector>

#include "dgt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dgt::run_cli(args, std::cout, std::cerr);
}
