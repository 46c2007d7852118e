#include <iostream>
#include <string>
#include <vector>

#include "landau/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return landau::run_cli(args, std::cout, std::cerr);
}
