#include <iostream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return gyrokin::cli::run(args, std::cout, std::cerr, gyrokin::cli::process_environment());
}
