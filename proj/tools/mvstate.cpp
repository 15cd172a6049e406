#include <iostream>
#include <string>
#include <vector>

#include "mvstate/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvstate::cli::run(args, std::cout);
}
