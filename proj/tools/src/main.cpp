// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "puspec_cli/cli.hpp"

int main(int argc, char** argv) {
  return puspec::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
