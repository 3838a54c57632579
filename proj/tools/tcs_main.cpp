#include <iostream>
#include <string>
#include <vector>

#include "tcs/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcs::run_cli(args, std::cout, std::cerr);
}
