#include "intseq/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return intseq::cli::run(args, std::cout, std::cerr);
}
