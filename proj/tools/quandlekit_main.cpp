#include <iostream>

#include "quandlekit/cli.hpp"

int main(int argc, char** argv) {
  return quandlekit::run_cli(argc, argv, std::cout, std::cerr);
}
