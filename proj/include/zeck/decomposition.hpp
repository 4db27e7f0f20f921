#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "zeck/recurrence.hpp"

namespace zeck {

/// Interval sizes above this refuse brute-force enumeration with ScaleTooLarge.
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

/**
 * Legality of digit strings as a finite automaton.
 *
 * State j (0 <= j < L) means the current block has matched c_1..c_j. From
 * state j a digit below c_{j+1} closes the block (back to state 0, so zeros
 * between blocks are absorbed there), the digit c_{j+1} extends the match,
 * and anything larger is illegal. Matching all of c_1..c_L is illegal.
 * For (1,1) this is exactly "binary, no two adjacent ones".
 */
class CascadeAutomaton {
public:
    explicit CascadeAutomaton(const RecurrenceSpec& spec) : coeffs_(spec.coeffs()) {}

    std::size_t states() const noexcept { return coeffs_.size(); }

    /// Largest digit allowed from `state`.
    std::uint64_t max_digit(std::size_t state) const noexcept {
        const std::uint64_t c = coeffs_[state];
        return state + 1 == coeffs_.size() ? c - 1 : c;
    }

    /// Next state after reading `digit`, or nullopt if the digit is illegal here.
    std::optional<std::size_t> step(std::size_t state, std::uint64_t digit) const noexcept {
        const std::uint64_t c = coeffs_[state];
        if (digit < c) return 0;
        if (digit == c && state + 1 < coeffs_.size()) return state + 1;
        return std::nullopt;
    }

    /// Digit `c_{state+1}` that continues the match from `state`.
    std::uint64_t match_digit(std::size_t state) const noexcept { return coeffs_[state]; }

private:
    std::vector<std::uint64_t> coeffs_;
};

/**
 * N = sum_j a_j * H_{m+1-j}, leading digit first. The empty decomposition
 * (m = 0) stands for N = 0 and is what decompose(0) returns.
 */
class Decomposition {
public:
    Decomposition(RecurrenceSpec spec, std::vector<std::uint64_t> digits)
        : spec_(std::move(spec)), digits_(std::move(digits)) {}

    static Decomposition empty(RecurrenceSpec spec) { return Decomposition(std::move(spec), {}); }

    const RecurrenceSpec& spec() const noexcept { return spec_; }
    std::size_t top_index() const noexcept { return digits_.size(); }
    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }
    bool is_empty() const noexcept { return digits_.empty(); }

    /// Coefficient of H_i (1-based), zero outside 1..m.
    std::uint64_t digit_at_index(std::size_t i) const noexcept {
        return (i == 0 || i > digits_.size()) ? 0 : digits_[digits_.size() - i];
    }

    /// Number of summands k = sum of the digits.
    std::uint64_t summands() const noexcept;

    bool operator==(const Decomposition&) const = default;

private:
    RecurrenceSpec spec_;
    std::vector<std::uint64_t> digits_;
};

/// Greedy legal decomposition. Uses `table` if it reaches past N and an
/// extended private copy otherwise. Throws InvalidArgument for negative N.
Decomposition decompose(const Natural& n, const SequenceTable& table);

bool is_legal(std::span<const std::uint64_t> digits, const RecurrenceSpec& spec);
/// Throws SpecMismatch if d was built over another recurrence.
bool is_legal(const Decomposition& d, const RecurrenceSpec& spec);

/// Throws IndexOutOfTable if the table is shorter than d.top_index().
Natural recompose(const Decomposition& d, const SequenceTable& table);
Natural recompose(std::span<const std::uint64_t> digits, const SequenceTable& table);

/// Visits every legal digit string with top index exactly n in lexicographic
/// order. Throws ScaleTooLarge when H_{n+1} - H_n exceeds `limit`.
void for_each_legal(const RecurrenceSpec& spec, std::size_t n,
                    const std::function<void(std::span<const std::uint64_t>)>& visit,
                    std::uint64_t limit = kExhaustiveLimit);

std::vector<Decomposition> enumerate_legal(const RecurrenceSpec& spec, std::size_t n,
                                           std::uint64_t limit = kExhaustiveLimit);

/// `N<TAB>m<TAB>a_1,...,a_m`
std::string to_line(const Decomposition& d, const Natural& value);
/// {value, top_index, digits, summands}; value as a decimal string.
nlohmann::json to_json(const Decomposition& d, const Natural& value);
/// `100 = H_10 + H_5 + H_3 (k=3)`, with `3*H_3` for digits above one.
std::string format_sum(const Decomposition& d, const Natural& value);

}  // namespace zeck
