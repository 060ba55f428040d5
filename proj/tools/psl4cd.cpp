#include <iostream>
#include <string>
#include <vector>

#include "psl4cd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return psl4cd::run_cli(args, std::cout, std::cerr);
}
