#include <iostream>

#include "fuzzycurve/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fuzzycurve::cli::run(args, std::cout, std::cerr);
}
