#include <iostream>
#include <string>
#include <vector>

#include "alab/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return alab::cli::run_command(args, std::cout, std::cerr);
}
