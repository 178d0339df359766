#include <iostream>
#include <string>
#include <vector>

#include "vilenkin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vilenkin::cli::run(args, std::cout, std::cout, std::cerr);
}
