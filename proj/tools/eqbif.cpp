#include <iostream>
#include <string>
#include <vector>

#include "eqbif/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqbif::run(args, std::cout, std::cerr);
}
