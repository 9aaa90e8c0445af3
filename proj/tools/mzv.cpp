#include <iostream>
#include <string>
#include <vector>

#include "mzv/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mzv::cli::execute(args, std::cout, std::cerr);
}
