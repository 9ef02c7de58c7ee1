#include <iostream>
#include <string>
#include <vector>

#include "hyperhom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperhom::cli::run_command(args, std::cout, std::cerr);
}
