#include <iostream>
#include <string>
#include <vector>

#include "rds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = rds::cli::run(args, std::cin, std::cerr);
  std::cout << rds::cli::to_json(result).dump(2) << '\n';
  return rds::cli::exit_code(result.status);
}
