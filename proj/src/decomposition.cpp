#include "zeck/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zeck/error.hpp"

namespace zeck {

std::uint64_t Decomposition::summands() const noexcept {
    return std::accumulate(digits_.begin(), digits_.end(), std::uint64_t{0});
}

Decomposition decompose(const Natural& n, const SequenceTable& table) {
    if (sgn(n) < 0) throw Error(ErrorKind::InvalidArgument, "cannot decompose a negative integer");
    if (n == 0) return Decomposition::empty(table.spec());

    const SequenceTable cover = table.covering(n);
    const std::size_t top = *largest_index_leq(cover, n);
    const CascadeAutomaton automaton(cover.spec());

    std::vector<std::uint64_t> digits(top);
    Natural remainder = n;
    Natural quotient;
    std::size_t state = 0;
    for (std::size_t j = 0; j < top; ++j) {
        const Natural& term = cover.term(top - j);
        mpz_fdiv_q(quotient.get_mpz_t(), remainder.get_mpz_t(), term.get_mpz_t());
        std::uint64_t digit = automaton.max_digit(state);
        if (quotient < digit) digit = quotient.get_ui();
        if (digit != 0) mpz_submul_ui(remainder.get_mpz_t(), term.get_mpz_t(), digit);
        digits[j] = digit;
        state = *automaton.step(state, digit);
    }
    if (remainder != 0) {
        throw std::logic_error("greedy decomposition of " + n.get_str() + " left remainder " +
                               remainder.get_str() + " over spec " + cover.spec().to_string());
    }
    return Decomposition(cover.spec(), std::move(digits));
}

bool is_legal(std::span<const std::uint64_t> digits, const RecurrenceSpec& spec) {
    if (digits.empty()) return true;
    if (digits.front() == 0) return false;
    const CascadeAutomaton automaton(spec);
    std::size_t state = 0;
    for (const std::uint64_t digit : digits) {
        const auto next = automaton.step(state, digit);
        if (!next) return false;
        state = *next;
    }
    return true;
}

bool is_legal(const Decomposition& d, const RecurrenceSpec& spec) {
    if (d.spec() != spec) {
        throw Error(ErrorKind::SpecMismatch, "decomposition over (" + d.spec().to_string() +
                                                 ") checked against (" + spec.to_string() + ")");
    }
    return is_legal(d.digits(), spec);
}

Natural recompose(std::span<const std::uint64_t> digits, const SequenceTable& table) {
    const std::size_t top = digits.size();
    if (top > table.size()) {
        throw Error(ErrorKind::IndexOutOfTable, "top index " + std::to_string(top) +
                                                    " beyond table of size " + std::to_string(table.size()));
    }
    Natural value = 0;
    for (std::size_t j = 0; j < top; ++j) {
        if (digits[j] != 0) mpz_addmul_ui(value.get_mpz_t(), table.term(top - j).get_mpz_t(), digits[j]);
    }
    return value;
}

Natural recompose(const Decomposition& d, const SequenceTable& table) {
    if (d.spec() != table.spec()) {
        throw Error(ErrorKind::SpecMismatch, "decomposition over (" + d.spec().to_string() +
                                                 ") recomposed with table for (" +
                                                 table.spec().to_string() + ")");
    }
    return recompose(d.digits(), table);
}

void for_each_legal(const RecurrenceSpec& spec, std::size_t n,
                    const std::function<void(std::span<const std::uint64_t>)>& visit,
                    std::uint64_t limit) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "top index must be at least 1");
    const SequenceTable table = generate(spec, n + 1);
    const Natural width = table.term(n + 1) - table.term(n);
    if (width > limit) {
        throw Error(ErrorKind::ScaleTooLarge, "interval [H_" + std::to_string(n) + ", H_" +
                                                  std::to_string(n + 1) + ") holds " + width.get_str() +
                                                  " integers, limit is " + std::to_string(limit));
    }

    const CascadeAutomaton automaton(spec);
    std::vector<std::uint64_t> digits(n, 0);
    // states[j] is the automaton state before reading digit j.
    std::vector<std::size_t> states(n + 1, 0);

    // Depth-first in lexicographic order; digit j restarts at its lowest value
    // whenever an earlier digit changes.
    std::size_t j = 0;
    digits[0] = 1;
    while (true) {
        if (digits[j] <= automaton.max_digit(states[j])) {
            states[j + 1] = *automaton.step(states[j], digits[j]);
            if (j + 1 == n) {
                visit(digits);
                ++digits[j];
            } else {
                ++j;
                digits[j] = 0;
            }
            continue;
        }
        if (j == 0) break;
        --j;
        ++digits[j];
    }
}

std::vector<Decomposition> enumerate_legal(const RecurrenceSpec& spec, std::size_t n, std::uint64_t limit) {
    std::vector<Decomposition> out;
    for_each_legal(
        spec, n,
        [&](std::span<const std::uint64_t> digits) {
            out.emplace_back(spec, std::vector<std::uint64_t>(digits.begin(), digits.end()));
        },
        limit);
    return out;
}

std::string to_line(const Decomposition& d, const Natural& value) {
    std::string out = value.get_str();
    out += '\t';
    out += std::to_string(d.top_index());
    out += '\t';
    for (std::size_t j = 0; j < d.digits().size(); ++j) {
        if (j) out += ',';
        out += std::to_string(d.digits()[j]);
    }
    return out;
}

nlohmann::json to_json(const Decomposition& d, const Natural& value) {
    return {
        {"value", value.get_str()},
        {"top_index", d.top_index()},
        {"digits", d.digits()},
        {"summands", d.summands()},
    };
}

std::string format_sum(const Decomposition& d, const Natural& value) {
    std::string out = value.get_str() + " =";
    if (d.is_empty()) {
        out += " 0";
    } else {
        bool first = true;
        for (std::size_t i = d.top_index(); i >= 1; --i) {
            const std::uint64_t a = d.digit_at_index(i);
            if (a == 0) continue;
            out += first ? " " : " + ";
            first = false;
            if (a > 1) out += std::to_string(a) + "*";
            out += "H_" + std::to_string(i);
        }
    }
    out += " (k=" + std::to_string(d.summands()) + ")";
    return out;
}

}  // namespace zeck
