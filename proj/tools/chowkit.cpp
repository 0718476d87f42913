#include <iostream>

#include "chowkit/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chowkit::cli::run(args, std::cout, std::cerr);
}
