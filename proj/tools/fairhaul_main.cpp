#include <iostream>

#include "fairhaul/cli.hpp"

int main(int argc, char** argv) {
  return fairhaul::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
