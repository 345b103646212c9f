#include <iostream>

#include "primegraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pg::cli::run(args, std::cout, std::cerr);
}
