#include <iostream>
#include <string>
#include <vector>

#include "hurwitz/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hurwitz::report::cli_main(args, std::cout, std::cerr);
}
