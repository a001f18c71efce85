#include <iostream>
#include <string>
#include <vector>

#include "gjg/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gjg::cli::run(args, gjg::cli::environment_from_process(), std::cout, std::cerr);
}
