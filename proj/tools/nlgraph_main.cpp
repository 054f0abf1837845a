#include <iostream>
#include <string>
#include <vector>

#include "nlgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlgraph::cli::run(args, std::cin, std::cout, std::cerr);
}
