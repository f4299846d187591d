#include <iostream>
#include <string>
#include <vector>

#include "eqrisk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eqrisk::run_cli(args, std::cout, std::cerr);
}
