#include "zeck/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "zeck/error.hpp"

namespace zeck {

CharPoly::CharPoly(const RecurrenceSpec& s) : spec(s) {
    coefficients.reserve(s.order() + 1);
    coefficients.emplace_back(1);
    for (const std::uint64_t c : s.coeffs()) coefficients.push_back(-Natural(c));
}

mpq_class CharPoly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (const Natural& a : coefficients) acc = acc * x + a;
    return acc;
}

long double CharPoly::evaluate(long double x) const noexcept {
    long double acc = 0;
    for (const Natural& a : coefficients) acc = acc * x + static_cast<long double>(a.get_d());
    return acc;
}

long double CharPoly::derivative(long double x) const noexcept {
    long double acc = 0;
    const std::size_t deg = degree();
    for (std::size_t i = 0; i < deg; ++i) {
        acc = acc * x + static_cast<long double>(coefficients[i].get_d()) * static_cast<long double>(deg - i);
    }
    return acc;
}

double dominant_root(const CharPoly& poly, double tol) {
    if (!(tol > 1e-15 && tol <= 1e-6)) {
        throw Error(ErrorKind::InvalidArgument, "root tolerance must lie in (1e-15, 1e-6]");
    }
    Natural sum = 0;
    for (std::size_t i = 1; i < poly.coefficients.size(); ++i) sum -= poly.coefficients[i];

    mpq_class lo = 1;
    mpq_class hi = mpq_class(sum + 1);
    const int lo_sign = sgn(poly.evaluate(lo));
    if (lo_sign >= 0 || sgn(poly.evaluate(hi)) <= 0) {
        throw Error(ErrorKind::NoSignChange, "characteristic polynomial of (" + poly.spec.to_string() +
                                                 ") does not change sign on [1, 1 + sum c_i]");
    }

    const mpq_class width_limit(1, 1'000'000);
    while (hi - lo > width_limit) {
        mpq_class mid = (lo + hi) / 2;
        const int s = sgn(poly.evaluate(mid));
        if (s == 0) return mid.get_d();
        (s < 0 ? lo : hi) = std::move(mid);
    }

    const long double a = static_cast<long double>(lo.get_d());
    const long double b = static_cast<long double>(hi.get_d());
    long double x = (a + b) / 2;
    for (int iter = 0; iter < 100; ++iter) {
        const long double fx = poly.evaluate(x);
        const long double dfx = poly.derivative(x);
        long double next = x - fx / dfx;
        if (!(next > a && next < b)) next = (x + (fx < 0 ? b : a)) / 2;
        const long double step = std::fabs(next - x);
        x = next;
        if (step <= 1e-3L * tol * x) break;
    }
    return static_cast<double>(x);
}

double dominant_root(const RecurrenceSpec& spec, double tol) { return dominant_root(CharPoly(spec), tol); }

double growth_check(const SequenceTable& table, double lambda) {
    const std::size_t needed = 2 * table.spec().order() + 10;
    if (table.size() < needed) {
        throw Error(ErrorKind::TableTooShort, "growth check needs at least " + std::to_string(needed) + " terms");
    }
    double deviation = 0;
    for (std::size_t n = table.size() - 10; n < table.size(); ++n) {
        const double ratio = mpq_class(table.term(n + 1), table.term(n)).get_d();
        deviation = std::max(deviation, std::abs(ratio - lambda));
    }
    return deviation;
}

nlohmann::json RootReport::to_json() const {
    return {{"spec", spec.to_string()}, {"lambda", lambda}, {"tol", tol}, {"growth_deviation", growth_deviation}};
}

RootReport root_report(const RecurrenceSpec& spec, double tol) {
    RootReport report{spec};
    report.lambda = dominant_root(spec, tol);
    report.tol = tol;
    report.growth_deviation = growth_check(generate(spec, std::max<std::size_t>(90, 2 * spec.order() + 10)), report.lambda);
    return report;
}

}  // namespace zeck
