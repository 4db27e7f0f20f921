#pragma once

/**
 * Positive linear recurrences and their sequence tables.
 *
 * A recurrence is given by nonnegative coefficients (c_1, ..., c_L) with
 * c_1 > 0 and c_L > 0. Its sequence starts at H_1 = 1 and uses
 *
 *   H_{n+1} = c_1 H_n + ... + c_n H_1 + 1        for n < L
 *   H_{n+1} = c_1 H_n + ... + c_L H_{n+1-L}      for n >= L
 *
 * so (1,1) yields 1, 2, 3, 5, 8, ... and (10) yields the powers of ten.
 * Indices are 1-based everywhere.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zeck {

using Natural = mpz_class;

class RecurrenceSpec {
public:
    /// Throws Error{EmptyCoeffs|LeadingZero|TrailingZero|NegativeCoeff}, and
    /// DegenerateSpec for (1), whose sequence never grows.
    static RecurrenceSpec validate(std::span<const std::int64_t> coeffs);

    /// Parses "1,1" or "2,0,3" (whitespace around entries is ignored).
    static RecurrenceSpec parse(std::string_view text);

    static RecurrenceSpec fibonacci() { return RecurrenceSpec({1, 1}); }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    /// c_i with 1-based i.
    std::uint64_t coeff(std::size_t i) const { return coeffs_.at(i - 1); }
    std::uint64_t max_coeff() const noexcept;

    std::string to_string() const;

    bool operator==(const RecurrenceSpec&) const = default;

private:
    explicit RecurrenceSpec(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<std::uint64_t> coeffs_;
};

RecurrenceSpec validate_spec(std::span<const std::int64_t> coeffs);

/**
 * Terms H_1..H_n of a recurrence. Immutable once built; extended() returns
 * a new table and never touches the terms of the original, so a table can
 * be shared freely between threads.
 */
class SequenceTable {
public:
    SequenceTable(RecurrenceSpec spec, std::size_t n);

    const RecurrenceSpec& spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return terms_->size(); }
    /// H_i with 1-based i; throws Error{IndexOutOfTable}.
    const Natural& term(std::size_t i) const;
    const std::vector<Natural>& terms() const noexcept { return *terms_; }

    /// Table with at least n terms. Shares nothing mutable with *this.
    SequenceTable extended(std::size_t n) const;

    /// Smallest extension whose last term exceeds x (at least the current size).
    SequenceTable covering(const Natural& x) const;

    void write_csv(std::ostream& out) const;

private:
    SequenceTable(RecurrenceSpec spec, std::shared_ptr<const std::vector<Natural>> terms)
        : spec_(std::move(spec)), terms_(std::move(terms)) {}

    RecurrenceSpec spec_;
    std::shared_ptr<const std::vector<Natural>> terms_;
};

SequenceTable generate(const RecurrenceSpec& spec, std::size_t n);

/// max i with H_i <= x, or nullopt when x < H_1.
std::optional<std::size_t> largest_index_leq(const SequenceTable& table, const Natural& x);

}  // namespace zeck
