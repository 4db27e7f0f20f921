#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeck {

enum class ErrorKind {
    EmptyCoeffs,
    LeadingZero,
    TrailingZero,
    NegativeCoeff,
    DegenerateSpec,
    BadSpecString,
    SpecMismatch,
    IndexOutOfTable,
    ScaleTooLarge,
    EmptyTable,
    WindowTooSmall,
    DegenerateDistribution,
    DegenerateMarginal,
    NonDecreasingIndices,
    NoSignChange,
    TableTooShort,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace zeck
