#include <iostream>
#include <string>
#include <vector>

#include "derivcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return derivcalc::run(args, std::cout, std::cerr);
}
