#include <iostream>

#include "syncgraph/cli.hpp"

int main(int argc, char** argv) {
  return syncgraph::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
