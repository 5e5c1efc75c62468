#include <exception>
#include <iostream>

#include "e6tool_app.hpp"

int main(int argc, char** argv) {
  try {
    return e6tool::run(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e6tool::kFailed;
  }
}
