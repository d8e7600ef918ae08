#include "lrs/field.hpp"

#include <cctype>
#include <sstream>

#include "lrs/error.hpp"

namespace lrs {

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 31;

std::uint32_t mod_reduce(const mpz_class& value, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

// Inverse of a modulo p for 0 < a < p, p prime.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    // old_r == gcd(a, p) == 1
    std::int64_t inv = old_s % static_cast<std::int64_t>(p);
    if (inv < 0) inv += p;
    return static_cast<std::uint32_t>(inv);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= kModulusLimit) throw Error(Errc::InvalidModulus, "modulus must be below 2^31");
    if (!is_prime_u64(p)) throw Error(Errc::InvalidModulus, std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    constexpr std::string_view prefix = "gf:";
    if (text.size() > prefix.size() && text.substr(0, prefix.size()) == prefix) {
        const auto digits = text.substr(prefix.size());
        if (all_digits(digits) && digits.size() <= 10) return prime(std::stoull(std::string(digits)));
    }
    throw Error(Errc::ParseError, "unknown field '" + std::string(text) + "' (expected Q or gf:<prime>)");
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::Rationals ? std::string("Q") : "gf:" + std::to_string(modulus_);
}

FieldElement::FieldElement(FieldSpec spec) : spec_(spec) {
    if (spec_.is_prime())
        value_ = std::uint32_t{0};
    else
        value_ = mpq_class(0);
}

FieldElement FieldElement::from_int(long value, FieldSpec spec) {
    return canonical(mpz_class(value), mpz_class(1), spec);
}

FieldElement FieldElement::canonical(const mpz_class& num, const mpz_class& den, FieldSpec spec) {
    if (den == 0) throw Error(Errc::ZeroDenominator, "denominator is zero");
    FieldElement out(spec);
    if (spec.is_prime()) {
        const std::uint32_t p = spec.modulus();
        const std::uint32_t d = mod_reduce(den, p);
        if (d == 0)
            throw Error(Errc::NonInvertibleDenominator,
                        "denominator " + den.get_str() + " is not invertible mod " + std::to_string(p));
        const std::uint64_t n = mod_reduce(num, p);
        out.value_ = static_cast<std::uint32_t>(n * mod_inverse(d, p) % p);
    } else {
        mpq_class q(num, den);
        q.canonicalize();
        out.value_ = std::move(q);
    }
    return out;
}

FieldElement FieldElement::parse(std::string_view text, FieldSpec spec) {
    std::string_view body = text;
    bool negative = false;
    if (body.starts_with("-")) {
        negative = true;
        body.remove_prefix(1);
    } else if (body.starts_with("\xE2\x88\x92")) {
        negative = true;
        body.remove_prefix(3);
    }
    std::string_view num_text = body, den_text = "1";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text))
        throw Error(Errc::ParseError, "malformed field element '" + std::string(text) + "'");
    mpz_class num(std::string(num_text), 10);
    const mpz_class den(std::string(den_text), 10);
    if (negative) num = -num;
    return canonical(num, den, spec);
}

bool FieldElement::is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
    if (spec_.is_prime()) throw Error(Errc::FieldMismatch, "rational() on a prime field element");
    return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
    if (!spec_.is_prime()) throw Error(Errc::FieldMismatch, "residue() on a rational element");
    return std::get<std::uint32_t>(value_);
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (spec_ != rhs.spec_)
        throw Error(Errc::FieldMismatch, "operands over " + spec_.to_string() + " and " + rhs.spec_.to_string());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    FieldElement out(spec_);
    if (spec_.is_prime()) {
        out.value_ = mod_inverse(residue(), spec_.modulus());
    } else {
        mpq_class q;
        mpq_inv(q.get_mpq_t(), rational().get_mpq_t());
        out.value_ = std::move(q);
    }
    return out;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result = one(spec_);
    FieldElement base = *this;
    while (e != 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(spec_);
    if (spec_.is_prime()) {
        const std::uint32_t r = residue();
        out.value_ = r == 0 ? 0 : spec_.modulus() - r;
    } else {
        out.value_ = mpq_class(-rational());
    }
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (spec_.is_prime()) {
        const std::uint64_t s = std::uint64_t{residue()} + rhs.residue();
        value_ = static_cast<std::uint32_t>(s % spec_.modulus());
    } else {
        std::get<mpq_class>(value_) += rhs.rational();
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (spec_.is_prime()) {
        const std::uint64_t s = std::uint64_t{residue()} + spec_.modulus() - rhs.residue();
        value_ = static_cast<std::uint32_t>(s % spec_.modulus());
    } else {
        std::get<mpq_class>(value_) -= rhs.rational();
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (spec_.is_prime()) {
        const std::uint64_t s = std::uint64_t{residue()} * rhs.residue();
        value_ = static_cast<std::uint32_t>(s % spec_.modulus());
    } else {
        std::get<mpq_class>(value_) *= rhs.rational();
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
    return lhs.spec_ == rhs.spec_ && lhs.value_ == rhs.value_;
}

std::string FieldElement::to_string() const {
    if (spec_.is_prime()) return std::to_string(residue());
    return rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

Vector zero_vector(FieldSpec spec, std::size_t n) { return Vector(n, FieldElement(spec)); }

Vector parse_vector(std::string_view text, FieldSpec spec) {
    Vector out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(FieldElement::parse(token, spec));
    return out;
}

std::string format_vector(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ' ';
        out += v[i].to_string();
    }
    return out;
}

}  // namespace lrs
