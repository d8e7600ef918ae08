#pragma once

// Exact scalars over the rationals or a prime field GF(p), p < 2^31.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lrs {

class FieldSpec {
   public:
    enum class Kind { Rationals, Prime };

    static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
    /// Throws InvalidModulus unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "Q" or "gf:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    /// Zero for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    FieldSpec(Kind kind, std::uint32_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime_u64(std::uint64_t n) noexcept;

class FieldElement {
   public:
    /// The zero of `spec`.
    explicit FieldElement(FieldSpec spec);

    static FieldElement zero(FieldSpec spec) { return FieldElement(spec); }
    static FieldElement one(FieldSpec spec) { return from_int(1, spec); }
    static FieldElement from_int(long value, FieldSpec spec);
    /// Reduced representative of num/den. Throws ZeroDenominator, or
    /// NonInvertibleDenominator when p divides den.
    static FieldElement canonical(const mpz_class& num, const mpz_class& den, FieldSpec spec);
    /// Grammar: [-]digits[/digits]; U+2212 is accepted as the minus sign.
    static FieldElement parse(std::string_view text, FieldSpec spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Rationals only.
    const mpq_class& rational() const;
    /// Prime fields only.
    std::uint32_t residue() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

    std::string to_string() const;

   private:
    void check_same_field(const FieldElement& rhs) const;

    FieldSpec spec_;
    std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

using Vector = std::vector<FieldElement>;

Vector zero_vector(FieldSpec spec, std::size_t n);
/// Parses whitespace separated field elements.
Vector parse_vector(std::string_view text, FieldSpec spec);
std::string format_vector(const Vector& v);

}  // namespace lrs
