#include <iostream>

#include "trigeom/cli.hpp"

int main(int argc, char** argv) {
  return trigeom::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
