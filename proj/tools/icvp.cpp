#include <iostream>
#include <string>
#include <vector>

#include "icvp/cli.hpp"

int main(int argc, char** argv) {
  return icvp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
