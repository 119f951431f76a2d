#include <iostream>
#include <string>
#include <vector>

#include "mdgas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdgas::cli::run(args, std::cout, std::cerr);
}
