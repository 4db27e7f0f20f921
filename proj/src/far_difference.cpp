#include "zeck/far_difference.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zeck/error.hpp"

namespace zeck {

namespace {

void require_fibonacci(const SequenceTable& fib) {
    if (fib.spec() != RecurrenceSpec::fibonacci()) {
        throw Error(ErrorKind::SpecMismatch,
                    "far-difference needs the (1,1) table, got (" + fib.spec().to_string() + ")");
    }
}

/// Table whose boundary sums reach |n|.
SequenceTable covering_fibonacci(const SequenceTable& fib, const Natural& n) {
    return fib.covering(abs(n));
}

}  // namespace

std::size_t SignedDecomposition::positive_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(terms.begin(), terms.end(), [](const SignedTerm& t) { return t.sign > 0; }));
}

std::size_t SignedDecomposition::negative_count() const noexcept { return terms.size() - positive_count(); }

SignedDecomposition SignedDecomposition::negated() const {
    SignedDecomposition out = *this;
    for (auto& t : out.terms) t.sign = -t.sign;
    return out;
}

std::vector<Natural> boundary_sums(const SequenceTable& fib) {
    std::vector<Natural> sums(fib.size() + 1);
    sums[0] = 0;
    for (std::size_t n = 1; n <= fib.size(); ++n) {
        sums[n] = fib.term(n);
        if (n > kSameSignGap) sums[n] += sums[n - kSameSignGap];
    }
    return sums;
}

SignedDecomposition fardiff_decompose(const Natural& n, const SequenceTable& fib) {
    require_fibonacci(fib);
    SignedDecomposition out;
    if (n == 0) return out;

    // F_last > |n| implies S_last >= |n|.
    const SequenceTable table = covering_fibonacci(fib, n);
    const std::vector<Natural> sums = boundary_sums(table);

    int sign = sgn(n) > 0 ? +1 : -1;
    Natural rest = abs(n);
    while (rest != 0) {
        // Unique index with S_{i-1} < rest <= S_i.
        const auto it = std::lower_bound(sums.begin() + 1, sums.end(), rest);
        const auto index = static_cast<std::size_t>(it - sums.begin());
        out.terms.push_back({index, sign});
        rest -= table.term(index);
        if (sgn(rest) < 0) {
            rest = -rest;
            sign = -sign;
        }
    }
    return out;
}

bool is_valid_fardiff(const SignedDecomposition& d) {
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        if (d.terms[i].index == 0 || (i > 0 && d.terms[i].index >= d.terms[i - 1].index)) {
            throw Error(ErrorKind::NonDecreasingIndices, "far-difference indices must strictly decrease and stay >= 1");
        }
    }
    for (std::size_t i = 1; i < d.terms.size(); ++i) {
        const SignedTerm& hi = d.terms[i - 1];
        const SignedTerm& lo = d.terms[i];
        const std::size_t gap = hi.index - lo.index;
        if (gap < (hi.sign == lo.sign ? kSameSignGap : kOppositeSignGap)) return false;
    }
    return true;
}

Natural fardiff_value(const SignedDecomposition& d, const SequenceTable& fib) {
    require_fibonacci(fib);
    std::size_t top = 0;
    for (const auto& t : d.terms) top = std::max(top, t.index);
    const SequenceTable table = top > fib.size() ? fib.extended(top) : fib;
    Natural value = 0;
    for (const auto& t : d.terms) {
        if (t.sign > 0) {
            value += table.term(t.index);
        } else {
            value -= table.term(t.index);
        }
    }
    return value;
}

std::uint64_t JointCountTable::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [key, count] : counts) sum += count;
    return sum;
}

std::pair<Natural, Natural> interval_bounds(std::size_t n, FarDifferenceInterval interval) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "interval index must be at least 1");
    const SequenceTable fib = generate(RecurrenceSpec::fibonacci(), n + 1);
    if (interval == FarDifferenceInterval::Fibonacci) return {fib.term(n), fib.term(n + 1) - 1};
    const std::vector<Natural> sums = boundary_sums(fib);
    return {sums[n - 1] + 1, sums[n]};
}

JointCountTable joint_counts(std::size_t n, FarDifferenceInterval interval, unsigned threads, std::uint64_t limit) {
    const auto [first, last] = interval_bounds(n, interval);
    const Natural width_big = last - first + 1;
    if (width_big > limit) {
        throw Error(ErrorKind::ScaleTooLarge, "far-difference interval for n=" + std::to_string(n) + " holds " +
                                                  width_big.get_str() + " integers, limit is " + std::to_string(limit));
    }
    const std::uint64_t width = width_big.get_ui();
    const SequenceTable fib = generate(RecurrenceSpec::fibonacci(), n + 2);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, width / 4096)));

    using Tally = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;
    std::vector<Tally> partial(threads);
    auto work = [&](unsigned t) {
        const std::uint64_t begin = width * t / threads;
        const std::uint64_t end = width * (t + 1) / threads;
        Natural value = first + begin;
        for (std::uint64_t i = begin; i < end; ++i, ++value) {
            const SignedDecomposition d = fardiff_decompose(value, fib);
            ++partial[t][{d.positive_count(), d.negative_count()}];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    JointCountTable out{n, interval, {}};
    for (const auto& tally : partial) {
        for (const auto& [key, count] : tally) out.counts[key] += count;
    }
    return out;
}

double correlation(const JointCountTable& table) {
    Natural total = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (const auto& [key, count_u] : table.counts) {
        const Natural count = count_u;
        const auto [x, y] = key;
        total += count;
        sx += count * x;
        sy += count * y;
        sxx += count * x * x;
        syy += count * y * y;
        sxy += count * x * y;
    }
    // All three are total^2 times the (co)variances.
    const Natural cov = total * sxy - sx * sy;
    const Natural var_x = total * sxx - sx * sx;
    const Natural var_y = total * syy - sy * sy;
    if (var_x == 0 || var_y == 0) {
        throw Error(ErrorKind::DegenerateMarginal, "a marginal of the joint table has zero variance");
    }
    const double ratio_sq = mpq_class(cov * cov, var_x * var_y).get_d();
    const double r = std::sqrt(ratio_sq);
    return sgn(cov) < 0 ? -r : r;
}

std::pair<double, double> marginal_means(const JointCountTable& table) {
    Natural total = 0, sx = 0, sy = 0;
    for (const auto& [key, count_u] : table.counts) {
        const Natural count = count_u;
        total += count;
        sx += count * key.first;
        sy += count * key.second;
    }
    if (total == 0) throw Error(ErrorKind::EmptyTable, "joint table has no mass");
    return {mpq_class(sx, total).get_d(), mpq_class(sy, total).get_d()};
}

double correlation_target(double phi) noexcept { return -(21.0 - 2.0 * phi) / (29.0 + 2.0 * phi); }

std::string format_fardiff(const SignedDecomposition& d, const Natural& value) {
    std::string out = value.get_str() + " =";
    if (d.terms.empty()) return out + " 0";
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const auto& t = d.terms[i];
        out += (i == 0) ? (t.sign > 0 ? " +" : " -") : (t.sign > 0 ? " + " : " - ");
        out += "F_" + std::to_string(t.index);
    }
    return out;
}

nlohmann::json to_json(const SignedDecomposition& d, const Natural& value) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : d.terms) terms.push_back({t.index, t.sign});
    return {{"value", value.get_str()}, {"terms", std::move(terms)}};
}

}  // namespace zeck
