#include <iostream>
#include <string>
#include <vector>

#include "fraccore/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fraccore::run_cli(args, std::cout, std::cerr);
}
