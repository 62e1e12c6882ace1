#include <iostream>
#include <string>
#include <vector>

#include "invmaxian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return invmaxian::run(args, std::cout, std::cerr);
}
