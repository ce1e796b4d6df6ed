#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "audit.hpp"

// Every direct transformation performed by the tests is re-derived by the
// audit hook; a disagreement fails the run even if all cases passed.
int main(int argc, char** argv) {
  auto& log = ltsconf::testing::install_audit();
  doctest::Context context(argc, argv);
  int result = context.run();
  if (context.shouldExit()) return result;
  std::cout << "transformation audit: " << log.checked << " checked, " << log.failures.size()
            << " mismatches\n";
  for (const auto& f : log.failures) std::cout << "  " << f << "\n";
  return log.failures.empty() ? result : 1;
}
