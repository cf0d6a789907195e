#include <vecvar/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  vecvar::CommandResult result = vecvar::run(args);
  std::cout << result.dump();
  return result.exit_code;
}
