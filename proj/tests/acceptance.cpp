// Runs the end-to-end criteria and prints one line per criterion.
#include <cstdio>

#include "e6r/acceptance.hpp"

int main() {
  const auto results = e6r::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s\n", r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str());
    for (const auto& i : r.items)
      if (!i.ok) std::printf("       %s: expected %s, computed %s\n", i.name.c_str(), i.expected.c_str(), i.computed.c_str());
    failed += !r.passed();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
