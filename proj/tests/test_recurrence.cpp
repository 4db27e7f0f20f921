#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "zeck/error.hpp"
#include "zeck/recurrence.hpp"
#include "zeck/spectral.hpp"

using namespace zeck;

namespace {

std::vector<std::string> terms_of(const SequenceTable& t) {
    std::vector<std::string> out;
    for (const auto& h : t.terms()) out.push_back(h.get_str());
    return out;
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

RecurrenceSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> order(1, 5), coeff(0, 4), positive(1, 4);
    std::vector<std::int64_t> c(order(rng));
    for (auto& ci : c) ci = coeff(rng);
    c.front() = positive(rng);
    c.back() = positive(rng);
    if (c.size() == 1) c[0] += 1;  // (1) is rejected as degenerate
    return validate_spec(c);
}

}  // namespace

TEST_CASE("validate_spec accepts and rejects per the coefficient rules") {
    const std::vector<std::int64_t> fib{1, 1}, dec{10}, lead{0, 1}, trail{1, 0}, neg{1, -1, 1}, none{}, one{1};
    CHECK(validate_spec(fib).order() == 2);
    CHECK(validate_spec(dec).order() == 1);
    CHECK(kind_of([&] { validate_spec(lead); }) == ErrorKind::LeadingZero);
    CHECK(kind_of([&] { validate_spec(trail); }) == ErrorKind::TrailingZero);
    CHECK(kind_of([&] { validate_spec(neg); }) == ErrorKind::NegativeCoeff);
    CHECK(kind_of([&] { validate_spec(none); }) == ErrorKind::EmptyCoeffs);
    CHECK(kind_of([&] { validate_spec(one); }) == ErrorKind::DegenerateSpec);
    CHECK(validate_spec(std::vector<std::int64_t>{2}).order() == 1);
}

TEST_CASE("spec strings") {
    CHECK(RecurrenceSpec::parse("2,0,3").coeffs() == std::vector<std::uint64_t>{2, 0, 3});
    CHECK(RecurrenceSpec::parse(" 1 , 1 ") == RecurrenceSpec::fibonacci());
    CHECK(RecurrenceSpec::parse("2,0,3").to_string() == "2,0,3");
    CHECK(kind_of([] { RecurrenceSpec::parse(""); }) == ErrorKind::EmptyCoeffs);
    CHECK(kind_of([] { RecurrenceSpec::parse("1,x"); }) == ErrorKind::BadSpecString);
    CHECK(kind_of([] { RecurrenceSpec::parse("1,,1"); }) == ErrorKind::BadSpecString);
    CHECK(kind_of([] { RecurrenceSpec::parse("0,1"); }) == ErrorKind::LeadingZero);
    CHECK(kind_of([] { RecurrenceSpec::parse("1,-2,1"); }) == ErrorKind::NegativeCoeff);
}

TEST_CASE("generate uses the initial conditions") {
    using V = std::vector<std::string>;
    CHECK(terms_of(generate(RecurrenceSpec::parse("1,1"), 6)) == V{"1", "2", "3", "5", "8", "13"});
    CHECK(terms_of(generate(RecurrenceSpec::parse("1,1,1"), 6)) == V{"1", "2", "4", "7", "13", "24"});
    CHECK(terms_of(generate(RecurrenceSpec::parse("10"), 4)) == V{"1", "10", "100", "1000"});
    CHECK(terms_of(generate(RecurrenceSpec::parse("2,0,1"), 5)) == V{"1", "3", "7", "15", "33"});
    CHECK(kind_of([] { generate(RecurrenceSpec::fibonacci(), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("terms never overflow") {
    const auto t = generate(RecurrenceSpec::parse("10"), 1000);
    CHECK(t.term(1000).get_str() == "1" + std::string(999, '0'));
}

TEST_CASE("every term satisfies its defining clause for random specs") {
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 40; ++trial) {
        const RecurrenceSpec spec = random_spec(rng);
        const std::size_t n = 200;
        const auto table = generate(spec, n);
        const auto& c = spec.coeffs();
        REQUIRE(table.term(1) == 1);
        for (std::size_t m = 1; m < n; ++m) {
            CHECK(table.term(m + 1) > table.term(m));
            Natural expected = m < c.size() ? 1 : 0;
            for (std::size_t i = 1; i <= c.size() && i <= m; ++i) expected += Natural(c[i - 1]) * table.term(m + 1 - i);
            CHECK(table.term(m + 1) == expected);
        }
    }
}

TEST_CASE("ratios approach the dominant root") {
    SUBCASE("Fibonacci distance to phi shrinks at every step") {
        const auto t = generate(RecurrenceSpec::fibonacci(), 60);
        const double phi = dominant_root(RecurrenceSpec::fibonacci());
        double previous = 1e300;
        for (std::size_t n = 4; n < 30; ++n) {
            const double d = std::abs(mpq_class(t.term(n + 1), t.term(n)).get_d() - phi);
            CHECK(d < previous);
            previous = d;
        }
    }
    SUBCASE("block maxima of the distance shrink for other specs") {
        for (const char* text : {"1,1,1", "2,0,1", "3,1", "1,0,0,1"}) {
            const auto spec = RecurrenceSpec::parse(text);
            const auto t = generate(spec, 270);
            const double lambda = dominant_root(spec);
            double previous = 1e300;
            for (std::size_t block = 0; block < 5; ++block) {
                double worst = 0;
                for (std::size_t n = 10 + 50 * block; n < 60 + 50 * block; ++n) {
                    worst = std::max(worst, std::abs(mpq_class(t.term(n + 1), t.term(n)).get_d() - lambda));
                }
                CHECK(worst <= previous);
                previous = worst;
            }
            CHECK(previous < 1e-6);
        }
    }
}

TEST_CASE("largest_index_leq") {
    const auto fib = generate(RecurrenceSpec::fibonacci(), 30);
    CHECK(largest_index_leq(fib, 100) == 10u);
    CHECK(fib.term(10) == 89);
    CHECK(largest_index_leq(fib, 8) == 5u);
    CHECK_FALSE(largest_index_leq(fib, 0).has_value());
    CHECK(largest_index_leq(fib, 1) == 1u);

    std::mt19937_64 rng(7);
    const auto trib = generate(RecurrenceSpec::parse("1,1,1"), 40);
    std::uniform_int_distribution<unsigned long> x_dist(0, trib.term(40).get_ui() + 10);
    for (int i = 0; i < 1000; ++i) {
        const Natural x = x_dist(rng);
        std::optional<std::size_t> scan;
        for (std::size_t j = 1; j <= trib.size(); ++j) {
            if (trib.term(j) <= x) scan = j;
        }
        CHECK(largest_index_leq(trib, x) == scan);
    }
}

TEST_CASE("extension leaves the original table untouched") {
    const auto base = generate(RecurrenceSpec::parse("1,1,1"), 10);
    const Natural* first = &base.term(1);
    const auto longer = base.extended(25);
    CHECK(base.size() == 10);
    CHECK(longer.size() == 25);
    CHECK(&base.term(1) == first);
    CHECK(&longer.term(1) != first);
    for (std::size_t i = 1; i <= 10; ++i) CHECK(longer.term(i) == base.term(i));
    CHECK(longer.terms() == generate(RecurrenceSpec::parse("1,1,1"), 25).terms());

    const auto covering = base.covering(10000);
    CHECK(covering.terms().back() > 10000);
    CHECK(covering.term(covering.size() - 1) <= 10000);
    CHECK(kind_of([&] { base.term(11); }) == ErrorKind::IndexOutOfTable);
}

TEST_CASE("table CSV export") {
    std::ostringstream out;
    generate(RecurrenceSpec::fibonacci(), 4).write_csv(out);
    CHECK(out.str() == "index,term\n1,1\n2,2\n3,3\n4,5\n");
}
