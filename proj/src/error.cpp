#include "lrs/error.hpp"

namespace lrs {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::InvalidModulus: return "InvalidModulus";
        case Errc::ParseError: return "ParseError";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::InsufficientTerms: return "InsufficientTerms";
        case Errc::NotLinearlyRecurrent: return "NotLinearlyRecurrent";
        case Errc::BadInput: return "BadInput";
        case Errc::OracleExhausted: return "OracleExhausted";
        case Errc::NotMonic: return "NotMonic";
        case Errc::BadInitLength: return "BadInitLength";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace lrs
