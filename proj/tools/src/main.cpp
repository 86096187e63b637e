#include <iostream>

#include "semitop_cli/commands.hpp"

int main(int argc, char** argv) {
  return semitop::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
