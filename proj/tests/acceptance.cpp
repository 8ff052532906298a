// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <iostream>

#include "cyclecollide/verify.hpp"

int main() {
  const auto summary = cyclecollide::verify::run_verify({}, &std::cout);
  const bool ok = summary.all_passed();
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
  return ok ? 0 : 1;
}
