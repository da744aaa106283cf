#include <iostream>

#include "rinf/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const rinf::cli::CommandResult result = rinf::cli::run(args);
  if (!result.help.empty()) {
    std::cout << result.help;
    return result.exit_code;
  }
  std::cout << result.to_json().dump(2) << '\n';
  if (result.payload.contains("error")) std::cerr << "rinf: " << result.payload["error"]["message"].get<std::string>() << '\n';
  return result.exit_code;
}
