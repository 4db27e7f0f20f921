#pragma once

/**
 * Far-difference representations: every integer is uniquely a signed sum of
 * Fibonacci numbers (F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...) in which two
 * consecutive terms of the same sign differ in index by at least 4 and two
 * consecutive terms of opposite sign by at least 3.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zeck/recurrence.hpp"

namespace zeck {

struct SignedTerm {
    std::size_t index = 0;
    int sign = +1;  // +1 or -1

    bool operator==(const SignedTerm&) const = default;
};

/// Terms ordered by strictly decreasing index.
struct SignedDecomposition {
    std::vector<SignedTerm> terms;

    std::size_t positive_count() const noexcept;
    std::size_t negative_count() const noexcept;
    SignedDecomposition negated() const;

    bool operator==(const SignedDecomposition&) const = default;
};

inline constexpr std::size_t kSameSignGap = 4;
inline constexpr std::size_t kOppositeSignGap = 3;

/// S_n = F_n + F_{n-4} + F_{n-8} + ..., the largest value whose far-difference
/// representation leads with F_n. S_0 = 0. Index 0..fib.size().
std::vector<Natural> boundary_sums(const SequenceTable& fib);

/// Throws SpecMismatch unless `fib` is the (1,1) table; extends it as needed.
SignedDecomposition fardiff_decompose(const Natural& n, const SequenceTable& fib);

/// Throws NonDecreasingIndices if indices do not strictly decrease (or hit 0).
bool is_valid_fardiff(const SignedDecomposition& d);

Natural fardiff_value(const SignedDecomposition& d, const SequenceTable& fib);

enum class FarDifferenceInterval {
    /// S_{n-1} < N <= S_n: leading term exactly +F_n.
    LeadingIndex,
    /// F_n <= N < F_{n+1}.
    Fibonacci,
};

struct JointCountTable {
    std::size_t n = 0;
    FarDifferenceInterval interval = FarDifferenceInterval::LeadingIndex;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;  // (k+, k-) -> count

    std::uint64_t total() const noexcept;
};

/// Interval endpoints [first, last] (inclusive) for interval index n.
std::pair<Natural, Natural> interval_bounds(std::size_t n, FarDifferenceInterval interval);

JointCountTable joint_counts(std::size_t n, FarDifferenceInterval interval = FarDifferenceInterval::LeadingIndex,
                             unsigned threads = 0, std::uint64_t limit = 10'000'000);

/// Pearson correlation of (K+, K-) from exact integer sums.
/// Throws DegenerateMarginal when either marginal has zero variance.
double correlation(const JointCountTable& table);

/// Mean of K+ and K- under the table.
std::pair<double, double> marginal_means(const JointCountTable& table);

/// -(21 - 2 phi) / (29 + 2 phi)
double correlation_target(double phi) noexcept;

/// `4 = +F_4 - F_1`
std::string format_fardiff(const SignedDecomposition& d, const Natural& value);
/// {value, terms: [[index, sign], ...]}
nlohmann::json to_json(const SignedDecomposition& d, const Natural& value);

}  // namespace zeck
