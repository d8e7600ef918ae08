#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrs {

enum class Errc {
    ZeroDenominator,
    NonInvertibleDenominator,
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    ParseError,
    DegreeTooSmall,
    DimensionMismatch,
    InsufficientTerms,
    NotLinearlyRecurrent,
    BadInput,
    OracleExhausted,
    NotMonic,
    BadInitLength,
};

std::string_view errc_name(Errc code) noexcept;

/// Error raised by every operation in the library. The code identifies the
/// failure class; the message carries the details.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace lrs
