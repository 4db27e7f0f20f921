#include "zeck/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zeck/decomposition.hpp"
#include "zeck/error.hpp"

namespace zeck {

namespace {

using Poly = std::vector<Natural>;  // coefficient of x^k at index k

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void grow(Poly& p, std::size_t size) {
    if (p.size() < size) p.resize(size);
}

/// dst += x^offset * (1 + x + ... + x^{width-1}) * src
void add_window(Poly& dst, const Poly& src, std::uint64_t width, std::uint64_t offset = 0) {
    if (width == 0 || src.empty()) return;
    const std::size_t len = src.size() + width - 1;
    grow(dst, len + offset);
    Natural run = 0;
    for (std::size_t k = 0; k < len; ++k) {
        if (k < src.size()) run += src[k];
        if (k >= width && k - width < src.size()) run -= src[k - width];
        dst[k + offset] += run;
    }
}

/// dst += x^shift * src
void add_shifted(Poly& dst, const Poly& src, std::uint64_t shift) {
    if (src.empty()) return;
    grow(dst, src.size() + shift);
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (src[k] != 0) dst[k + shift] += src[k];
    }
}

CountTable to_table(const RecurrenceSpec& spec, std::size_t n, const Poly& poly) {
    CountTable table{spec, n, {}};
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] != 0) table.counts.emplace(k, poly[k]);
    }
    return table;
}

}  // namespace

Natural CountTable::total() const {
    Natural sum = 0;
    for (const auto& [k, count] : counts) sum += count;
    return sum;
}

CountTable count_exhaustive(const RecurrenceSpec& spec, std::size_t n, unsigned threads, std::uint64_t limit) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "interval index must be at least 1");
    const SequenceTable table = generate(spec, n + 1);
    const Natural& lo = table.term(n);
    const Natural width_big = table.term(n + 1) - lo;
    if (width_big > limit) {
        throw Error(ErrorKind::ScaleTooLarge, "interval [H_" + std::to_string(n) + ", H_" + std::to_string(n + 1) +
                                                  ") holds " + width_big.get_str() + " integers, limit is " +
                                                  std::to_string(limit));
    }
    const std::uint64_t width = width_big.get_ui();

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, width / 4096)));

    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
    auto work = [&](unsigned t) {
        const std::uint64_t begin = width * t / threads;
        const std::uint64_t end = width * (t + 1) / threads;
        auto& tally = partial[t];
        Natural value = lo + begin;
        for (std::uint64_t i = begin; i < end; ++i, ++value) {
            ++tally[decompose(value, table).summands()];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    CountTable out{spec, n, {}};
    for (const auto& tally : partial) {
        for (const auto& [k, count] : tally) out.counts[k] += count;
    }
    return out;
}

std::vector<CountTable> count_dp_series(const RecurrenceSpec& spec, std::size_t n_max) {
    const std::vector<std::uint64_t>& c = spec.coeffs();
    const std::size_t order = c.size();

    // suffix[s]: digit-sum polynomial of the legal continuations of length r
    // when the automaton is in state s.
    std::vector<Poly> suffix(order, Poly{Natural(1)});
    std::vector<Poly> next(order);

    std::vector<CountTable> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        // Leading digit d in 1..c_1-1 stays in state 0, d = c_1 moves to
        // state 1 (illegal when L = 1).
        Poly leading;
        add_window(leading, suffix[0], c[0] - 1, 1);
        if (order > 1) add_shifted(leading, suffix[1], c[0]);
        trim(leading);
        out.push_back(to_table(spec, n, leading));

        if (n == n_max) break;
        for (std::size_t s = 0; s < order; ++s) {
            Poly& p = next[s];
            p.clear();
            add_window(p, suffix[0], c[s]);
            if (s + 1 < order) add_shifted(p, suffix[s + 1], c[s]);
            trim(p);
        }
        std::swap(suffix, next);
    }
    return out;
}

CountTable count_dp(const RecurrenceSpec& spec, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "interval index must be at least 1");
    return std::move(count_dp_series(spec, n).back());
}

MomentSummary moments(const CountTable& table) {
    Natural total = 0;
    Natural first = 0;
    Natural second = 0;
    for (const auto& [k, count] : table.counts) {
        total += count;
        first += count * k;
        second += count * k * k;
    }
    if (total == 0) throw Error(ErrorKind::EmptyTable, "count table has no mass");
    MomentSummary out;
    out.n = table.n;
    out.mean = Rational(first, total);
    out.mean.canonicalize();
    out.variance = Rational(second, total) - out.mean * out.mean;
    out.variance.canonicalize();
    out.mean_approx = out.mean.get_d();
    out.variance_approx = out.variance.get_d();
    return out;
}

std::pair<double, double> moments_approx(const CountTable& table) {
    const Natural total = table.total();
    if (total == 0) throw Error(ErrorKind::EmptyTable, "count table has no mass");
    std::vector<std::pair<double, double>> weighted;
    weighted.reserve(table.counts.size());
    long double mean = 0;
    for (const auto& [k, count] : table.counts) {
        const double p = Rational(count, total).get_d();
        weighted.emplace_back(static_cast<double>(k), p);
        mean += static_cast<long double>(k) * p;
    }
    long double variance = 0;
    for (const auto& [k, p] : weighted) variance += (k - mean) * (k - mean) * p;
    return {static_cast<double>(mean), static_cast<double>(variance)};
}

LinearFit least_squares(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::InvalidArgument, "x and y lengths differ");
    if (xs.size() < 2) throw Error(ErrorKind::WindowTooSmall, "least squares needs at least two points");
    const double count = static_cast<double>(xs.size());
    double x_mean = 0, y_mean = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= count;
    y_mean /= count;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (sxx == 0) throw Error(ErrorKind::WindowTooSmall, "least squares needs distinct x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fit.residual = std::max(fit.residual, std::abs(ys[i] - (fit.slope * xs[i] + fit.intercept)));
    }
    return fit;
}

MomentFits fit_moments(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max) {
    if (n_min == 0 || n_max < n_min + 5) {
        throw Error(ErrorKind::WindowTooSmall, "fit window [" + std::to_string(n_min) + ", " +
                                                   std::to_string(n_max) + "] needs n_min >= 1 and n_max - n_min >= 5");
    }
    const auto series = count_dp_series(spec, n_max);
    MomentFits out;
    std::vector<double> xs, means, variances;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        out.per_n.push_back(moments(series[n - 1]));
        xs.push_back(static_cast<double>(n));
        means.push_back(out.per_n.back().mean_approx);
        variances.push_back(out.per_n.back().variance_approx);
    }
    out.mean = least_squares(xs, means);
    out.variance = least_squares(xs, variances);
    return out;
}

LinearFit lekkerkerker_slope(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max) {
    return fit_moments(spec, n_min, n_max).mean;
}

LinearFit variance_slope(const RecurrenceSpec& spec, std::size_t n_min, std::size_t n_max) {
    return fit_moments(spec, n_min, n_max).variance;
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_lattice(std::span<const double> probs, std::int64_t k_min, double mean, double sd,
                  KsConvention convention) {
    if (!(sd > 0)) throw Error(ErrorKind::DegenerateDistribution, "standard deviation is zero");
    auto z = [&](double x) { return (x - mean) / sd; };
    double distance = 0;
    long double cdf = 0;
    if (convention == KsConvention::Midpoint) {
        // Below the support: k_min - 1/2, where the empirical CDF is still 0.
        distance = normal_cdf(z(static_cast<double>(k_min) - 0.5));
        for (std::size_t i = 0; i < probs.size(); ++i) {
            cdf += probs[i];
            const double x = static_cast<double>(k_min + static_cast<std::int64_t>(i)) + 0.5;
            distance = std::max(distance, std::abs(static_cast<double>(cdf) - normal_cdf(z(x))));
        }
    } else {
        for (std::size_t i = 0; i < probs.size(); ++i) {
            const double phi = normal_cdf(z(static_cast<double>(k_min + static_cast<std::int64_t>(i))));
            distance = std::max(distance, std::abs(static_cast<double>(cdf) - phi));
            cdf += probs[i];
            distance = std::max(distance, std::abs(static_cast<double>(cdf) - phi));
        }
    }
    return std::min(distance, 1.0);
}

double ks_distance(const CountTable& table) {
    const MomentSummary m = moments(table);
    if (m.variance == 0) throw Error(ErrorKind::DegenerateDistribution, "summand count has zero variance");
    const Natural total = table.total();
    const std::uint64_t k_min = table.counts.begin()->first;
    const std::uint64_t k_max = table.counts.rbegin()->first;
    std::vector<double> probs(k_max - k_min + 1, 0.0);
    for (const auto& [k, count] : table.counts) probs[k - k_min] = Rational(count, total).get_d();
    return ks_lattice(probs, static_cast<std::int64_t>(k_min), m.mean_approx, std::sqrt(m.variance_approx),
                      KsConvention::Midpoint);
}

}  // namespace zeck
