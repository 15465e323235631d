#include <iostream>
#include <string>
#include <vector>

#include "ptm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ptm::cli::run(args, std::cout, std::cerr);
}
