#include <iostream>
#include <string>
#include <vector>

#include "mindist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mindist::cli::run(args, std::cout, std::cerr);
}
