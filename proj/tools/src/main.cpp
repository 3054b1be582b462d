#include <iostream>

#include "robustmine/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return robustmine::cli::run(args, std::cout, std::cerr);
}
