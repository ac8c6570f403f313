#include <iostream>

#include "bfly/cli.hpp"

int main(int argc, char** argv) {
  return bfly::cli::run_cli(argc, argv, std::cout, std::cerr);
}
