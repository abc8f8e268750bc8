#include <iostream>

#include "dyn/cli/cli.hpp"

int main(int argc, char** argv) {
  return dyn::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
