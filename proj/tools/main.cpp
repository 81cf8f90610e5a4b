#include <iostream>

#include "rwa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rwa::cli::run(args, std::cout, std::cerr);
}
