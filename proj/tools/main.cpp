#include <iostream>

#include "islecolor/cli.hpp"

int main(int argc, char** argv) {
  return islecolor::run_cli(argc, argv, std::cout, std::cerr);
}
