// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <iostream>

#include "zeck/verify/acceptance.hpp"

int main() {
    const auto results = zeck::acceptance::run({}, std::cout);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << '/' << results.size() << " criteria passed\n";
    return zeck::acceptance::all_passed(results) ? 0 : 1;
}
