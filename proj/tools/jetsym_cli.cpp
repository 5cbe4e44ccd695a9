#include <iostream>

#include "jetsym/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return jetsym::run_cli(args, std::cout, std::cerr);
}
