#include <iostream>
#include <string>
#include <vector>

#include "symtensor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symtensor::cli_dispatch(args, std::cout, std::cerr);
}
