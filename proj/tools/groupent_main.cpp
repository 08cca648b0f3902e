#include <iostream>

#include "groupent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return groupent::run(args, std::cout, std::cerr);
}
