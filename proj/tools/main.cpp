#include <iostream>

#include "forestalg/cli.hpp"

int main(int argc, char** argv) {
  return forestalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
