#include "zeck/recurrence.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "zeck/error.hpp"

namespace zeck {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

void append_terms(const RecurrenceSpec& spec, std::vector<Natural>& terms, std::size_t n) {
    const std::size_t order = spec.order();
    if (terms.empty() && n >= 1) terms.emplace_back(1);
    terms.reserve(n);
    while (terms.size() < n) {
        // terms.size() is the current top index m; we build H_{m+1}.
        const std::size_t m = terms.size();
        Natural next = (m < order) ? 1 : 0;
        const std::size_t used = std::min(m, order);
        for (std::size_t i = 1; i <= used; ++i) {
            const std::uint64_t c = spec.coeff(i);
            if (c != 0) {
                mpz_addmul_ui(next.get_mpz_t(), terms[m - i].get_mpz_t(), c);
            }
        }
        terms.push_back(std::move(next));
    }
}

}  // namespace

RecurrenceSpec RecurrenceSpec::validate(std::span<const std::int64_t> coeffs) {
    if (coeffs.empty()) throw Error(ErrorKind::EmptyCoeffs, "recurrence needs at least one coefficient");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0) {
            throw Error(ErrorKind::NegativeCoeff,
                        "coefficient c_" + std::to_string(i + 1) + " is negative");
        }
    }
    if (coeffs.front() == 0) throw Error(ErrorKind::LeadingZero, "c_1 must be positive");
    if (coeffs.back() == 0) throw Error(ErrorKind::TrailingZero, "c_L must be positive");
    // (1) gives H_n = 1 for every n: no numeration system.
    if (coeffs.size() == 1 && coeffs[0] == 1) {
        throw Error(ErrorKind::DegenerateSpec, "the recurrence (1) is constant; a one-term recurrence needs c_1 >= 2");
    }
    return RecurrenceSpec(std::vector<std::uint64_t>(coeffs.begin(), coeffs.end()));
}

RecurrenceSpec RecurrenceSpec::parse(std::string_view text) {
    std::vector<std::int64_t> values;
    if (trim(text).empty()) return validate(values);
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto field = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw Error(ErrorKind::BadSpecString, "cannot parse coefficient '" + std::string(field) + "'");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return validate(values);
}

std::uint64_t RecurrenceSpec::max_coeff() const noexcept {
    return *std::max_element(coeffs_.begin(), coeffs_.end());
}

std::string RecurrenceSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

RecurrenceSpec validate_spec(std::span<const std::int64_t> coeffs) {
    return RecurrenceSpec::validate(coeffs);
}

SequenceTable::SequenceTable(RecurrenceSpec spec, std::size_t n) : spec_(std::move(spec)) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "sequence table needs n >= 1");
    auto terms = std::make_shared<std::vector<Natural>>();
    append_terms(spec_, *terms, n);
    terms_ = std::move(terms);
}

const Natural& SequenceTable::term(std::size_t i) const {
    if (i == 0 || i > terms_->size()) {
        throw Error(ErrorKind::IndexOutOfTable,
                    "index " + std::to_string(i) + " outside table of size " + std::to_string(terms_->size()));
    }
    return (*terms_)[i - 1];
}

SequenceTable SequenceTable::extended(std::size_t n) const {
    if (n <= terms_->size()) return *this;
    auto terms = std::make_shared<std::vector<Natural>>(*terms_);
    append_terms(spec_, *terms, n);
    return SequenceTable(spec_, std::move(terms));
}

SequenceTable SequenceTable::covering(const Natural& x) const {
    if (terms_->back() > x) return *this;
    auto terms = std::make_shared<std::vector<Natural>>(*terms_);
    while (terms->back() <= x) append_terms(spec_, *terms, terms->size() + 1);
    return SequenceTable(spec_, std::move(terms));
}

void SequenceTable::write_csv(std::ostream& out) const {
    out << "index,term\n";
    for (std::size_t i = 0; i < terms_->size(); ++i) {
        out << (i + 1) << ',' << (*terms_)[i].get_str() << '\n';
    }
}

SequenceTable generate(const RecurrenceSpec& spec, std::size_t n) { return SequenceTable(spec, n); }

std::optional<std::size_t> largest_index_leq(const SequenceTable& table, const Natural& x) {
    const auto& terms = table.terms();
    const auto it = std::upper_bound(terms.begin(), terms.end(), x);
    if (it == terms.begin()) return std::nullopt;
    return static_cast<std::size_t>(it - terms.begin());
}

}  // namespace zeck
