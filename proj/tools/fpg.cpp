#include <iostream>

#include "fpg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  fpg::cli::CommandResult r = fpg::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
