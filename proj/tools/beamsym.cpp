#include <iostream>
#include <string>
#include <vector>

#include "beamsym/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return beamsym::run(args, std::cout, std::cerr);
}
