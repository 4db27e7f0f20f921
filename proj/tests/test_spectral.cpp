#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zeck/error.hpp"
#include "zeck/spectral.hpp"
#include "zeck/statistics.hpp"
#include "zeck/verify/oracles.hpp"

using namespace zeck;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected zeck::Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("characteristic polynomial") {
    const CharPoly p(RecurrenceSpec::parse("2,0,3"));
    REQUIRE(p.degree() == 3);
    CHECK(p.coefficients == std::vector<Natural>{1, -2, 0, -3});
    CHECK(p.evaluate(mpq_class(2)) == -3);  // 8 - 8 - 3
    CHECK(p.evaluate(2.0L) == -3.0L);
    CHECK(p.derivative(2.0L) == 4.0L);  // 3x^2 - 4x
}

TEST_CASE("dominant_root examples") {
    CHECK(std::abs(dominant_root(RecurrenceSpec::fibonacci(), 1e-14) - 1.6180339887498949) < 1e-12);
    CHECK(std::abs(dominant_root(RecurrenceSpec::parse("10"), 1e-12) - 10.0) < 1e-12);
    CHECK(std::abs(dominant_root(RecurrenceSpec::parse("2")) - 2.0) < 1e-12);

    const auto trib = RecurrenceSpec::parse("1,1,1");
    const long double oracle = oracle::bisect_root(trib, 1e-12L);
    CHECK(std::abs(dominant_root(trib, 1e-13) - static_cast<double>(oracle)) < 1e-10);
    CHECK(std::abs(dominant_root(trib, 1e-13) - 1.839286755214161) < 1e-10);

    CHECK(kind_of([] { dominant_root(RecurrenceSpec::fibonacci(), 1e-16); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { dominant_root(RecurrenceSpec::fibonacci(), 1e-3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("root brackets a sign change and satisfies the residual bound") {
    for (const char* text : {"1,1", "1,1,1", "10", "2,0,1", "3,1,4,1,5", "1000,0,1", "1,0,0,0,0,0,1"}) {
        const auto spec = RecurrenceSpec::parse(text);
        const CharPoly p(spec);
        const double tol = 1e-12;
        const double lambda = dominant_root(p, tol);
        CHECK_MESSAGE(sgn(p.evaluate(mpq_class(lambda - 10 * tol))) < 0, text);
        CHECK_MESSAGE(sgn(p.evaluate(mpq_class(lambda + 10 * tol))) > 0, text);
        CHECK(std::abs(p.evaluate(static_cast<long double>(lambda))) <=
              tol * p.derivative(static_cast<long double>(lambda)));
        CHECK(std::abs(lambda - static_cast<double>(oracle::bisect_root(spec, 1e-13L))) < 1e-9 * lambda);
    }
}

TEST_CASE("growth_check") {
    const double phi = dominant_root(RecurrenceSpec::fibonacci());
    CHECK(growth_check(generate(RecurrenceSpec::fibonacci(), 90), phi) < 1e-15);
    CHECK(growth_check(generate(RecurrenceSpec::parse("10"), 30), 10.0) == 0.0);
    const auto trib = RecurrenceSpec::parse("1,1,1");
    CHECK(growth_check(generate(trib, 60), dominant_root(trib)) < 1e-9);
    CHECK(kind_of([] { growth_check(generate(RecurrenceSpec::fibonacci(), 13), 1.6); }) == ErrorKind::TableTooShort);
}

TEST_CASE("Lekkerkerker target from the root matches the fitted slope") {
    const double phi = dominant_root(RecurrenceSpec::fibonacci());
    const double target = 1.0 / (phi * phi + 1.0);
    CHECK(target == doctest::Approx(0.2763932022500210).epsilon(1e-15));
    CHECK(std::abs(lekkerkerker_slope(RecurrenceSpec::fibonacci(), 50, 100).slope - target) < 1e-4);
}

TEST_CASE("root report record") {
    const RootReport r = root_report(RecurrenceSpec::fibonacci(), 1e-14);
    const auto j = r.to_json();
    CHECK(j["spec"] == "1,1");
    CHECK(j["lambda"].get<double>() == r.lambda);
    CHECK(j["tol"].get<double>() == 1e-14);
    CHECK(j["growth_deviation"].get<double>() < 1e-15);
}
