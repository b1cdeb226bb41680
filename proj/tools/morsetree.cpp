#include <iostream>
#include <string>
#include <vector>

#include "morsetree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return morsetree::cli::run(args, std::cout, std::cerr);
}
