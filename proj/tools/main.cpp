#include <iostream>

#include "arith/cli.hpp"

int main(int argc, char** argv) {
  return arith::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
