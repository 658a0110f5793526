#include <iostream>
#include <vector>

#include "chu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chu::run_cli(args, std::cout, std::cerr);
}
