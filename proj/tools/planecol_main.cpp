#include <iostream>
#include <vector>

#include "planecol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return planecol::run_cli(args, std::cout, std::cerr);
}
