#include <iostream>
#include <string>
#include <vector>

#include "sagrs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sagrs::cli::cli_main(args, std::cout, std::cerr);
}
