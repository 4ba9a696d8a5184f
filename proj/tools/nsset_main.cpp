#include <iostream>
#include <string>
#include <vector>

#include "nsset/cli.hpp"

int main(int argc, char** argv) {
  return nsset::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                         std::cerr);
}
