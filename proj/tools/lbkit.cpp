#include <iostream>

#include "lbkit/cli.hpp"

int main(int argc, char** argv) {
  return lbkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
