#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zeck/recurrence.hpp"

namespace zeck {

using Rational = mpq_class;

/// Exact counts p_{n,k}: how many N in [H_n, H_{n+1}) have k summands.
struct CountTable {
    RecurrenceSpec spec;
    std::size_t n = 0;
    std::map<std::uint64_t, Natural> counts;  // k -> count, zero entries omitted

    Natural total() const;
    bool operator==(const CountTable&) const = default;
};

struct MomentSummary {
    std::size_t n = 0;
    Rational mean;
    Rational variance;
    double mean_approx = 0.0;
    double variance_approx = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // max |y - (slope*x + intercept)| over the window
};

/// Decomposes every N in [H_n, H_{n+1}) and tallies the summand counts.
/// Work is split over `threads` workers (0 = hardware concurrency).
CountTable count_exhaustive(const RecurrenceSpec& spec, std::size_t n, unsigned threads = 0,
                            std::uint64_t limit = 10'000'000);

/// Same table as count_exhaustive, by dynamic programming over the legality
/// automaton with digit-sum generating polynomials. Exact at any n.
CountTable count_dp(const RecurrenceSpec& spec, std::size_t n);

/// count_dp for every n in 1..n_max from a single pass (element i is n = i+1).
std::vector<CountTable> count_dp_series(const RecurrenceSpec& spec, std::size_t n_max);

/// Throws EmptyTable when there is no mass.
MomentSummary moments(const CountTable& table);

/// Mean and variance via floating point probabilities, independent of the
/// rational route in moments().
std::pair<double, double> moments_approx(const CountTable& table);

/// Ordinary least squares. Throws WindowTooSmall for fewer than two points.
LinearFit least_squares(std::span<const double> xs, std::span<const double> ys);

/// Fits of the mean (resp. variance) of k against n over [n_min, n_max].
/// Throws WindowTooSmall unless n_max - n_min >= 5.
LinearFit lekkerkerker_slope(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max);
LinearFit variance_slope(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max);

/// Both fits from one DP pass.
struct MomentFits {
    LinearFit mean;
    LinearFit variance;
    std::vector<MomentSummary> per_n;
};
MomentFits fit_moments(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max);

double normal_cdf(double x) noexcept;

enum class KsConvention {
    /// Empirical CDF compared at the half-integer points k + 1/2.
    Midpoint,
    /// Classical two-sided supremum over the real line.
    Supremum,
};

/**
 * KS distance between a distribution on the integers k_min, k_min+1, ...
 * (probabilities in `probs`) standardized by (mean, sd) and the standard
 * normal. Throws DegenerateDistribution when sd <= 0.
 */
double ks_lattice(std::span<const double> probs, std::int64_t k_min, double mean, double sd,
                  KsConvention convention);

/// KS distance of the standardized summand count, midpoint convention.
double ks_distance(const CountTable& table);

}  // namespace zeck
