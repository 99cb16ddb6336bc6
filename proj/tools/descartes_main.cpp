#include <iostream>
#include <string>
#include <vector>

#include "descartes/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return descartes::cli::run(args, std::cout, std::cerr);
}
