#include <iostream>

#include "sphemb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphemb::cli::run(args, std::cout);
}
