#include "zeck/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zeck/decomposition.hpp"
#include "zeck/error.hpp"

namespace zeck::oracle {

namespace {

bool legal_from(std::span<const std::uint64_t> digits, std::size_t pos, const std::vector<std::uint64_t>& c) {
    if (pos == digits.size()) return true;
    if (digits[pos] == 0) return false;  // a block starts with a nonzero digit
    const std::size_t rest = digits.size() - pos;
    // Whole remainder is a proper prefix of c.
    if (rest < c.size() && std::equal(digits.begin() + static_cast<std::ptrdiff_t>(pos), digits.end(), c.begin())) {
        return true;
    }
    for (std::size_t s = 1; s <= c.size() && s <= rest; ++s) {
        // a_{pos..pos+s-2} == c_1..c_{s-1}
        bool prefix = true;
        for (std::size_t i = 0; i + 1 < s; ++i) prefix = prefix && digits[pos + i] == c[i];
        if (!prefix) break;
        if (digits[pos + s - 1] >= c[s - 1]) continue;
        std::size_t next = pos + s;
        while (next < digits.size() && digits[next] == 0) ++next;
        if (legal_from(digits, next, c)) return true;
    }
    return false;
}

}  // namespace

bool is_legal_by_blocks(std::span<const std::uint64_t> digits, const RecurrenceSpec& spec) {
    if (digits.empty()) return true;
    return legal_from(digits, 0, spec.coeffs());
}

std::vector<std::vector<std::uint64_t>> all_digit_strings(const RecurrenceSpec& spec, std::size_t n) {
    const std::uint64_t base = spec.max_coeff() + 1;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> digits(n, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == n) {
            out.push_back(digits);
            return;
        }
        for (std::uint64_t d = (pos == 0 ? 1 : 0); d < base; ++d) {
            digits[pos] = d;
            fill(pos + 1);
        }
    };
    if (n > 0) fill(0);
    return out;
}

std::vector<std::int64_t> fibonacci_values(std::size_t count) {
    std::vector<std::int64_t> f(count + 1, 0);  // f[0] unused
    if (count >= 1) f[1] = 1;
    if (count >= 2) f[2] = 2;
    for (std::size_t i = 3; i <= count; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

std::map<std::int64_t, std::vector<SignedDecomposition>> signed_representations(std::size_t max_index,
                                                                                std::int64_t bound) {
    const auto fib = fibonacci_values(max_index);
    std::map<std::int64_t, std::vector<SignedDecomposition>> out;
    SignedDecomposition current;
    std::function<void(std::int64_t)> extend = [&](std::int64_t value) {
        if (std::llabs(value) <= bound) out[value].push_back(current);
        const bool empty = current.terms.empty();
        for (int sign : {+1, -1}) {
            std::size_t top = max_index;
            if (!empty) {
                const SignedTerm& last = current.terms.back();
                const std::size_t gap = last.sign == sign ? 4 : 3;
                if (last.index <= gap) continue;
                top = last.index - gap;
            }
            for (std::size_t index = top; index >= 1; --index) {
                current.terms.push_back({index, sign});
                extend(value + sign * fib[index]);
                current.terms.pop_back();
            }
        }
    };
    extend(0);
    return out;
}

long double bisect_root(const RecurrenceSpec& spec, long double resolution) {
    const auto& c = spec.coeffs();
    auto p = [&](long double x) {
        long double acc = 1;
        for (const std::uint64_t ci : c) acc = acc * x - static_cast<long double>(ci);
        return acc;
    };
    long double lo = 1, hi = 1;
    for (const std::uint64_t ci : c) hi += static_cast<long double>(ci);
    if (p(lo) == 0) return lo;
    while (hi - lo > resolution) {
        const long double mid = (lo + hi) / 2;
        (p(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

BijectionReport check_legal_bijection(const RecurrenceSpec& spec, std::size_t n) {
    BijectionReport report;
    const SequenceTable table = generate(spec, n + 1);
    const Natural& lo = table.term(n);
    const Natural width_big = table.term(n + 1) - lo;
    if (width_big > kExhaustiveLimit) {
        throw Error(ErrorKind::ScaleTooLarge, "interval [H_" + std::to_string(n) + ", H_" + std::to_string(n + 1) +
                                                  ") holds " + width_big.get_str() + " integers");
    }
    const std::uint64_t width = width_big.get_ui();
    std::vector<bool> hit(width, false);
    auto fail = [&](std::string why) {
        if (report.ok) report.detail = std::move(why);
        report.ok = false;
    };
    for_each_legal(spec, n, [&](std::span<const std::uint64_t> digits) {
        ++report.strings;
        if (!report.ok) return;
        const Decomposition d(spec, std::vector<std::uint64_t>(digits.begin(), digits.end()));
        const Natural value = recompose(d, table);
        if (value < lo || value >= table.term(n + 1)) {
            fail("string " + to_line(d, value) + " recomposes outside the interval");
            return;
        }
        const std::uint64_t offset = Natural(value - lo).get_ui();
        if (hit[offset]) {
            fail("value " + value.get_str() + " reached twice");
            return;
        }
        hit[offset] = true;
        if (decompose(value, table) != d) fail("decompose(" + value.get_str() + ") differs from the enumerated string");
    });
    if (report.ok && report.strings != width) {
        fail(std::to_string(report.strings) + " strings for an interval of " + std::to_string(width));
    }
    return report;
}

}  // namespace zeck::oracle
