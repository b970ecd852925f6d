#include <iostream>

#include "keller/cli.hpp"

int main(int argc, char** argv) {
  try {
    return keller::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
