#include <iostream>

#include "gbei/cli.hpp"

int main(int argc, char** argv) {
  return gbei::cli::run(argc, argv, std::cout, std::cerr);
}
