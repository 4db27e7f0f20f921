#pragma once

// Brute-force references used by the tests and the acceptance runner. None
// of these go through the automaton, the DP or the boundary-sum search.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zeck/far_difference.hpp"
#include "zeck/recurrence.hpp"

namespace zeck::oracle {

/// Legality read straight off the block definition: a block matches
/// c_1..c_{s-1}, has a_s < c_s, is followed by zeros and then another legal
/// block, or the whole remainder is a proper prefix of (c_1..c_L).
bool is_legal_by_blocks(std::span<const std::uint64_t> digits, const RecurrenceSpec& spec);

/// Every digit string of length n over 0..max(c_i) with nonzero leading digit.
std::vector<std::vector<std::uint64_t>> all_digit_strings(const RecurrenceSpec& spec, std::size_t n);

/// F_1 = 1, F_2 = 2, ... computed with plain 64-bit additions.
std::vector<std::int64_t> fibonacci_values(std::size_t count);

/// Every gap-constrained signed index set with indices <= max_index whose
/// value lies in [-bound, bound], grouped by value. Includes the empty set.
std::map<std::int64_t, std::vector<SignedDecomposition>> signed_representations(std::size_t max_index,
                                                                                std::int64_t bound);

/// Plain bisection on the characteristic polynomial in long double.
long double bisect_root(const RecurrenceSpec& spec, long double resolution);

struct BijectionReport {
    bool ok = true;
    std::uint64_t strings = 0;
    std::string detail;
};

/// Recomposes every legal string with top index n and checks the values hit
/// [H_n, H_{n+1}) exactly once each and that decompose() returns the string.
/// Throws ScaleTooLarge past the enumeration limit.
BijectionReport check_legal_bijection(const RecurrenceSpec& spec, std::size_t n);

}  // namespace zeck::oracle
