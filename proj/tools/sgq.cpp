#include <iostream>

#include "sgq/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgq::run_command(args, std::cout, std::cerr);
}
