#include <iostream>
#include <string>
#include <vector>

#include "terrarough/cli/run.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return terrarough::cli::run(args, std::cout, std::cerr);
}
