#include <iostream>
#include <string>
#include <vector>

#include "nichols/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nichols::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
