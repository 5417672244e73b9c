#include <iostream>

#include "conicval/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conicval::run_cli(args, std::cout, std::cerr);
}
