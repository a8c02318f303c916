#include <iostream>

#include "expokit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return expokit::run_command(args, std::cout, std::cerr);
}
