#include <iostream>
#include <string>
#include <vector>

#include "mapenum/cli/app.hpp"

int main(int argc, char** argv) {
  return mapenum::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
