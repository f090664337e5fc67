#include <iostream>

#include "ratsub/cli.hpp"

int main(int argc, char** argv) {
  return ratsub::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
