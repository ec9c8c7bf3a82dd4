#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return telugu_entropy::cli::run(argc, argv, std::cout, std::cerr);
}
