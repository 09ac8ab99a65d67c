#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  return starec::cli::run(argc, argv, std::cout, std::cerr);
}
