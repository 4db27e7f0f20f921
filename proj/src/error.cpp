#include "zeck/error.hpp"

namespace zeck {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyCoeffs: return "EmptyCoeffs";
        case ErrorKind::LeadingZero: return "LeadingZero";
        case ErrorKind::TrailingZero: return "TrailingZero";
        case ErrorKind::NegativeCoeff: return "NegativeCoeff";
        case ErrorKind::DegenerateSpec: return "DegenerateSpec";
        case ErrorKind::BadSpecString: return "BadSpecString";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::IndexOutOfTable: return "IndexOutOfTable";
        case ErrorKind::ScaleTooLarge: return "ScaleTooLarge";
        case ErrorKind::EmptyTable: return "EmptyTable";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorKind::DegenerateMarginal: return "DegenerateMarginal";
        case ErrorKind::NonDecreasingIndices: return "NonDecreasingIndices";
        case ErrorKind::NoSignChange: return "NoSignChange";
        case ErrorKind::TableTooShort: return "TableTooShort";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace zeck
