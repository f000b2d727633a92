// Runs the ten reproduction checks and prints one line per criterion.
// Exit status is nonzero if any check fails.

#include <iostream>

#include "negtype/verify/suite.hpp"

int main() {
  negtype::verify::CheckSuite suite;
  bool all = true;
  for (const auto& c : negtype::verify::check_list()) {
    const auto r = suite.run(c.id);
    std::cout << negtype::verify::format_result(r) << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
