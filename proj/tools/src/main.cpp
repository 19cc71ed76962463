#include <iostream>
#include <string>
#include <vector>

#include "sfc_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sfc::cli::run(args, std::cout, std::cerr);
}
