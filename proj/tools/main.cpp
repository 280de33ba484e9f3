#include <iostream>
#include <string>
#include <vector>

#include "gf2fourier/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gf2f::run_cli(args, std::cout, std::cerr);
}
