#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "wqg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv("WQG_COLOR");
  const bool color = isatty(STDOUT_FILENO) && !(env && std::strcmp(env, "0") == 0);
  return wqg::run_cli(std::move(args), std::cin, std::cout, std::cerr, color);
}
