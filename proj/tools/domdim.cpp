#include <iostream>

#include "domdim/cli.hpp"

int main(int argc, char** argv) {
  return domdim::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
