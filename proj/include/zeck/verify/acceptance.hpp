#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeck::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 = no stated budget
    std::vector<std::string> details;
};

struct Options {
    unsigned threads = 0;
    std::vector<int> only;  // empty = all criteria
};

/// Runs the criteria in order, printing one PASS/FAIL line per criterion
/// (followed by indented detail lines) to `log` as each one finishes.
std::vector<CriterionResult> run(const Options& options, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace zeck::acceptance
