#pragma once

#include <vector>

#include "json.hpp"
#include "zeck/recurrence.hpp"

namespace zeck {

/// p(x) = x^L - c_1 x^{L-1} - ... - c_L, coefficients by descending power.
struct CharPoly {
    RecurrenceSpec spec;
    std::vector<Natural> coefficients;  // size L+1, leading 1

    explicit CharPoly(const RecurrenceSpec& spec);

    std::size_t degree() const noexcept { return coefficients.size() - 1; }
    mpq_class evaluate(const mpq_class& x) const;
    long double evaluate(long double x) const noexcept;
    long double derivative(long double x) const noexcept;
};

/**
 * The unique positive root of the characteristic polynomial. Exact rational
 * bisection on [1, 1 + sum c_i] down to a bracket of width 1e-6, then Newton
 * in extended precision inside the bracket. tol must lie in (1e-15, 1e-6].
 */
double dominant_root(const CharPoly& poly, double tol = 1e-14);
double dominant_root(const RecurrenceSpec& spec, double tol = 1e-14);

/// max |H_{n+1}/H_n - lambda| over the last ten ratios of the table.
/// Throws TableTooShort below 2L + 10 terms.
double growth_check(const SequenceTable& table, double lambda);

struct RootReport {
    RecurrenceSpec spec;
    double lambda = 0.0;
    double tol = 0.0;
    double growth_deviation = 0.0;

    nlohmann::json to_json() const;
};

RootReport root_report(const RecurrenceSpec& spec, double tol = 1e-14);

}  // namespace zeck
