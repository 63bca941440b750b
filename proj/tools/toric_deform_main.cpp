#include <iostream>
#include <string>
#include <vector>

#include "toric_deform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toric_deform::cli::run(args, std::cout, std::cerr);
}
