#include <iostream>

#include "itensor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return itensor::run_cli(args, std::cout, std::cerr);
}
