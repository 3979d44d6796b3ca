#include <string>
#include <vector>

#include "hallar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hallar::cli::run_main(args);
}
