#include <iostream>
#include <string>
#include <vector>

#include "leodyn/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leodyn::cli::run_cli(args, std::cout, std::cerr);
}
