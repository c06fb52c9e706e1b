#include <iostream>

#include "eulercert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulercert::run(args, std::cout, std::cerr);
}
