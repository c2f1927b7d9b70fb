#include <iostream>
#include "mp/cli.hpp"
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  int rc = mp::run_cli(args, out, err);
  std::cout << out;
  std::cerr << err;
  return rc;
}
