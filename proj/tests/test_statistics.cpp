#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zeck/error.hpp"
#include "zeck/spectral.hpp"
#include "zeck/statistics.hpp"

using namespace zeck;

namespace {

const std::vector<std::string> kSpecs = {"1,1", "1,1,1", "10", "2,0,1"};

CountTable table_of(std::map<std::uint64_t, long> counts, std::size_t n = 0) {
    CountTable t{RecurrenceSpec::fibonacci(), n, {}};
    for (const auto& [k, c] : counts) t.counts[k] = c;
    return t;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected zeck::Error");
    return ErrorKind::InvalidArgument;
}

Natural binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    Natural out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// p_{n,k} for (1,1): a leading 1, a forced 0, then k-1 non-adjacent ones
/// among n-2 places.
CountTable fibonacci_binomial_table(std::size_t n) {
    CountTable t{RecurrenceSpec::fibonacci(), n, {}};
    for (long k = 1; k <= static_cast<long>(n); ++k) {
        const Natural c = n == 1 ? Natural(k == 1 ? 1 : 0) : binomial(static_cast<long>(n) - k, k - 1);
        if (c != 0) t.counts[static_cast<std::uint64_t>(k)] = c;
    }
    return t;
}

}  // namespace

TEST_CASE("count_exhaustive examples") {
    const auto fib = RecurrenceSpec::fibonacci();
    CHECK(count_exhaustive(fib, 5).counts == table_of({{1, 1}, {2, 3}, {3, 1}}).counts);
    CHECK(count_exhaustive(fib, 2).counts == table_of({{1, 1}}).counts);
    const auto dec = count_exhaustive(RecurrenceSpec::parse("10"), 1);
    CHECK(dec.counts == table_of({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}}).counts);
    CHECK(kind_of([] { count_exhaustive(RecurrenceSpec::parse("10"), 8); }) == ErrorKind::ScaleTooLarge);
}

TEST_CASE("count_exhaustive merges thread tallies associatively") {
    const auto spec = RecurrenceSpec::parse("1,1,1");
    CHECK(count_exhaustive(spec, 16, 1) == count_exhaustive(spec, 16, 4));
}

TEST_CASE("count_dp examples") {
    const auto fib = RecurrenceSpec::fibonacci();
    CHECK(count_dp(fib, 5).counts == table_of({{1, 1}, {2, 3}, {3, 1}}).counts);
    CHECK(count_dp(fib, 10).total() == 55);
    const auto trib = RecurrenceSpec::parse("1,1,1");
    CHECK(count_dp(trib, 12) == count_exhaustive(trib, 12));
}

TEST_CASE("count_dp equals count_exhaustive") {
    for (const auto& text : kSpecs) {
        const auto spec = RecurrenceSpec::parse(text);
        const std::size_t n_max = text == "10" ? 6 : 18;
        const auto series = count_dp_series(spec, n_max);
        for (std::size_t n = 1; n <= n_max; ++n) {
            CHECK_MESSAGE(series[n - 1] == count_exhaustive(spec, n), "spec " << text << " n=" << n);
        }
    }
}

TEST_CASE("mass is conserved exactly") {
    for (const auto& text : kSpecs) {
        const auto spec = RecurrenceSpec::parse(text);
        const auto series = count_dp_series(spec, 300);
        const auto table = generate(spec, 301);
        for (std::size_t n = 1; n <= 300; ++n) {
            CHECK(series[n - 1].total() == table.term(n + 1) - table.term(n));
            CHECK(series[n - 1].counts.begin()->first >= 1);
            CHECK(series[n - 1].counts.rbegin()->first <= n * spec.max_coeff());
        }
    }
}

TEST_CASE("binomial closed form, confirmed by brute force, matches the DP at large n") {
    const auto fib = RecurrenceSpec::fibonacci();
    for (std::size_t n = 1; n <= 18; ++n) CHECK(fibonacci_binomial_table(n).counts == count_exhaustive(fib, n).counts);
    for (std::size_t n : {100, 301, 1000}) CHECK(fibonacci_binomial_table(n).counts == count_dp(fib, n).counts);
}

TEST_CASE("moments examples") {
    const MomentSummary m = moments(table_of({{1, 1}, {2, 3}, {3, 1}}, 5));
    CHECK(m.mean == 2);
    CHECK(m.variance == Rational(2, 5));
    CHECK(m.n == 5);
    CHECK(moments(table_of({{7, 123}})).variance == 0);

    const MomentSummary dec = moments(count_dp(RecurrenceSpec::parse("10"), 1));
    CHECK(dec.mean == 5);
    CHECK(dec.variance == Rational(20, 3));
    CHECK(dec.variance_approx == doctest::Approx(20.0 / 3.0).epsilon(1e-15));

    CHECK(kind_of([] { moments(table_of({})); }) == ErrorKind::EmptyTable);
}

TEST_CASE("rational and floating moments agree") {
    for (const auto& text : kSpecs) {
        const auto series = count_dp_series(RecurrenceSpec::parse(text), 400);
        for (std::size_t n = 2; n <= 400; n += 7) {
            const MomentSummary exact = moments(series[n - 1]);
            const auto [mean, variance] = moments_approx(series[n - 1]);
            CHECK(std::abs(mean - exact.mean_approx) <= 1e-10 * std::abs(exact.mean_approx));
            if (exact.variance_approx > 0) {
                CHECK(std::abs(variance - exact.variance_approx) <= 1e-10 * exact.variance_approx);
            }
            CHECK(exact.variance >= 0);
            CHECK(exact.mean >= series[n - 1].counts.begin()->first);
            CHECK(exact.mean <= series[n - 1].counts.rbegin()->first);
        }
    }
}

TEST_CASE("least squares") {
    const std::vector<double> xs{1, 2, 3, 4, 5, 6};
    const std::vector<double> flat(6, 3.5);
    const LinearFit f = least_squares(xs, flat);
    CHECK(f.slope == 0.0);
    CHECK(f.intercept == doctest::Approx(3.5));
    CHECK(f.residual == doctest::Approx(0.0));

    const std::vector<double> line{3, 5, 7, 9, 11, 13.5};
    const LinearFit g = least_squares(xs, line);
    CHECK(g.slope > 2.0);
    CHECK(g.residual > 0.0);
    CHECK(kind_of([] { least_squares(std::vector<double>{1}, std::vector<double>{1}); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("Lekkerkerker slope") {
    const double phi = dominant_root(RecurrenceSpec::fibonacci());
    const LinearFit fib = lekkerkerker_slope(RecurrenceSpec::fibonacci(), 50, 100);
    CHECK(std::abs(fib.slope - 1.0 / (phi * phi + 1.0)) < 1e-4);
    CHECK(fib.residual < 0.5);

    // Mean digit sum of an n-digit decimal: 5 for the leading digit plus 4.5
    // for each other digit. Brute-force check at small n, then the fit.
    for (std::size_t n = 1; n <= 5; ++n) {
        Rational expected(10 + 9 * (n - 1), 2);
        expected.canonicalize();
        CHECK(moments(count_exhaustive(RecurrenceSpec::parse("10"), n)).mean == expected);
    }
    CHECK(std::abs(lekkerkerker_slope(RecurrenceSpec::parse("10"), 5, 50).slope - 4.5) < 1e-6);

    CHECK(kind_of([] { lekkerkerker_slope(RecurrenceSpec::fibonacci(), 50, 54); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("variance slope") {
    // Regression constants from the DP at [50,100].
    const LinearFit fib = variance_slope(RecurrenceSpec::fibonacci(), 50, 100);
    CHECK(fib.slope == doctest::Approx(0.0894427191).epsilon(1e-8));
    for (const auto& [lo, hi] : {std::pair{30, 60}, std::pair{100, 200}, std::pair{20, 400}}) {
        const double other = variance_slope(RecurrenceSpec::fibonacci(), lo, hi).slope;
        CHECK(std::abs(other - fib.slope) < 0.5e-3 * fib.slope);
    }
    const LinearFit trib = variance_slope(RecurrenceSpec::parse("1,1,1"), 30, 60);
    CHECK(trib.slope == doctest::Approx(0.1319094281).epsilon(1e-8));
    CHECK(kind_of([] { variance_slope(RecurrenceSpec::fibonacci(), 50, 50); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("normal CDF") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(std::abs(normal_cdf(1.0) - 0.8413447460685429) < 1e-15);
    CHECK(std::abs(normal_cdf(-1.0) - 0.15865525393145707) < 1e-15);
    CHECK(std::abs(normal_cdf(-3.0) / 0.0013498980316300946 - 1.0) < 1e-12);
    CHECK(std::abs(normal_cdf(-8.0) / 6.22096057427178e-16 - 1.0) < 1e-12);
}

TEST_CASE("KS kernel on a symmetric two-point law") {
    // Mass 1/2 at -1 and +1: mean 0, sd 1.
    const std::vector<double> probs{0.5, 0.0, 0.5};
    // Supremum attained at x = -1: F = 1/2 against Phi(-1).
    CHECK(ks_lattice(probs, -1, 0.0, 1.0, KsConvention::Supremum) ==
          doctest::Approx(0.5 - 0.15865525393145707).epsilon(1e-12));
    CHECK(ks_lattice(probs, -1, 0.0, 1.0, KsConvention::Supremum) == doctest::Approx(0.341345).epsilon(1e-6));
    // Midpoints -1.5, -0.5, 0.5, 1.5: worst is 1/2 - Phi(-1/2).
    CHECK(ks_lattice(probs, -1, 0.0, 1.0, KsConvention::Midpoint) ==
          doctest::Approx(0.5 - 0.3085375387259869).epsilon(1e-12));
    CHECK(kind_of([&] { ks_lattice(probs, -1, 0.0, 0.0, KsConvention::Midpoint); }) ==
          ErrorKind::DegenerateDistribution);
}

TEST_CASE("ks_distance") {
    CHECK(kind_of([] { ks_distance(table_of({{3, 10}})); }) == ErrorKind::DegenerateDistribution);

    const auto fib = RecurrenceSpec::fibonacci();
    std::vector<double> d;
    for (std::size_t n : {100, 200, 400, 800}) d.push_back(ks_distance(count_dp(fib, n)));
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] < d[i - 1]);
    const double at_1000 = ks_distance(count_dp(fib, 1000));
    CHECK(at_1000 < 0.02);
    CHECK(at_1000 > 0.0);
}
