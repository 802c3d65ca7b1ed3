#include <iostream>
#include <string>
#include <vector>

#include "planarlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return planarlab::cli::run(args, std::cout, std::cerr);
}
