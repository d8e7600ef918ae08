#pragma once

#include <climits>
#include <compare>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrs/field.hpp"

namespace lrs {

/// Polynomial degree. The zero polynomial has degree neg_inf(), which
/// compares below every integer.
class Degree {
   public:
    constexpr Degree(int d) noexcept : value_(d) {}  // NOLINT(google-explicit-constructor)

    static constexpr Degree neg_inf() noexcept { return Degree(INT_MIN); }

    constexpr bool is_neg_inf() const noexcept { return value_ == INT_MIN; }
    constexpr int value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Degree, Degree) noexcept = default;
    friend constexpr bool operator==(Degree, Degree) noexcept = default;

   private:
    int value_;
};

std::ostream& operator<<(std::ostream& os, Degree d);

/// Dense univariate polynomial, coefficients in ascending powers. The
/// coefficient list never ends in a zero; the zero polynomial is empty.
class Poly {
   public:
    explicit Poly(FieldSpec spec) : spec_(spec) {}
    Poly(FieldSpec spec, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldElement& c);
    static Poly monomial(const FieldElement& c, std::size_t power);
    static Poly x_pow(FieldSpec spec, std::size_t power);
    static Poly from_ints(FieldSpec spec, std::initializer_list<long> ascending);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
    /// Zero past the degree.
    FieldElement coeff(std::size_t i) const;
    /// Throws DivisionByZero on the zero polynomial.
    const FieldElement& leading() const;

    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const FieldElement& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const FieldElement& s) { return lhs *= s; }
    friend Poly operator*(const FieldElement& s, Poly rhs) { return rhs *= s; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void check_same_field(const Poly& rhs) const;
    void trim();

    FieldSpec spec_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division a = q*b + r, deg r < deg b. Throws DivisionByZero.
DivMod divmod(const Poly& a, const Poly& b);

/// x^d * f(1/x). Throws DegreeTooSmall when d < deg f.
Poly reverse_at(const Poly& f, int d);

/// f / lc(f). Throws DivisionByZero on zero.
Poly monic(const Poly& f);

/// True iff g = c*f for some nonzero scalar c. Both must be nonzero.
bool scalar_multiple(const Poly& f, const Poly& g);

using LinearMap = std::function<Vector(const Vector&)>;

/// sum_i f_i * apply^i(seed) by Horner's rule: deg f applications of `apply`.
/// Throws DimensionMismatch when `apply` changes the vector length.
Vector eval_at_operator(const Poly& f, const LinearMap& apply, const Vector& seed);

/// "c0 c1 ... cd"; the zero polynomial prints as "0".
std::string format_ascending(const Poly& f);
/// "c0 + c1*x + ... + cd*x^d", zero terms omitted.
std::string format_pretty(const Poly& f);
Poly parse_ascending(std::string_view text, FieldSpec spec);

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace lrs
