#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "qcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool tty = isatty(STDOUT_FILENO) == 1;
  return qcat::run_cli(std::move(args), std::cout, std::cerr, tty);
}
