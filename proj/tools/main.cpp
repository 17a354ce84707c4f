#include <iostream>

#include "tdsolve/cli.hpp"

int main(int argc, char** argv) {
  return tdsolve::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
