#include <iostream>

#include "qgame/cli.hpp"

int main(int argc, char** argv) {
  return qgame::cli::run_main(argc, argv, std::cout, std::cerr);
}
