#include <iostream>
#include <string>
#include <vector>

#include "parmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parmod::cli::run(args, std::cout, std::cerr);
}
