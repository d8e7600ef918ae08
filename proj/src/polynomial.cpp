#include "lrs/polynomial.hpp"

#include <algorithm>

#include "lrs/error.hpp"

namespace lrs {

std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_neg_inf()) return os << "-inf";
    return os << d.value();
}

Poly::Poly(FieldSpec spec, std::vector<FieldElement> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.spec() != spec_) throw Error(Errc::FieldMismatch, "coefficient over " + c.spec().to_string());
    trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c}); }

Poly Poly::monomial(const FieldElement& c, std::size_t power) {
    std::vector<FieldElement> coeffs(power + 1, FieldElement(c.spec()));
    coeffs.back() = c;
    return Poly(c.spec(), std::move(coeffs));
}

Poly Poly::x_pow(FieldSpec spec, std::size_t power) { return monomial(FieldElement::one(spec), power); }

Poly Poly::from_ints(FieldSpec spec, std::initializer_list<long> ascending) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(ascending.size());
    for (long c : ascending) coeffs.push_back(FieldElement::from_int(c, spec));
    return Poly(spec, std::move(coeffs));
}

FieldElement Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement(spec_); }

const FieldElement& Poly::leading() const {
    if (coeffs_.empty()) throw Error(Errc::DivisionByZero, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly out(spec_);
    out.coeffs_.reserve(coeffs_.size() + k);
    out.coeffs_.assign(k, FieldElement(spec_));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

void Poly::check_same_field(const Poly& rhs) const {
    if (spec_ != rhs.spec_)
        throw Error(Errc::FieldMismatch, "polynomials over " + spec_.to_string() + " and " + rhs.spec_.to_string());
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement(spec_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement(spec_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const FieldElement& scalar) {
    if (scalar.spec() != spec_) throw Error(Errc::FieldMismatch, "scalar over " + scalar.spec().to_string());
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    lhs.check_same_field(rhs);
    Poly out(lhs.spec_);
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, FieldElement(lhs.spec_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.trim();
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (a.spec() != b.spec()) throw Error(Errc::FieldMismatch, "divmod operands over different fields");
    const FieldSpec spec = a.spec();
    if (a.degree() < b.degree()) return {Poly(spec), a};

    const auto db = static_cast<std::size_t>(b.degree().value());
    const FieldElement lead_inv = b.leading().inverse();
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElement> quot(rem.size() - db, FieldElement(spec));
    const auto bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const FieldElement q = rem[k] * lead_inv;
        const std::size_t shift = k - db;
        quot[shift] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * bc[j];
    }
    rem.resize(db, FieldElement(spec));
    return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

Poly reverse_at(const Poly& f, int d) {
    if (d < 0 || Degree(d) < f.degree())
        throw Error(Errc::DegreeTooSmall, "reversal degree " + std::to_string(d) + " below polynomial degree");
    if (f.is_zero()) return f;
    std::vector<FieldElement> out(static_cast<std::size_t>(d) + 1, FieldElement(f.spec()));
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(d) - i] = c[i];
    return Poly(f.spec(), std::move(out));
}

Poly monic(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::DivisionByZero, "monic of the zero polynomial");
    if (f.is_monic()) return f;
    return f * f.leading().inverse();
}

bool scalar_multiple(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return monic(f) == monic(g);
}

Vector eval_at_operator(const Poly& f, const LinearMap& apply, const Vector& seed) {
    const FieldSpec spec = f.spec();
    Vector acc = zero_vector(spec, seed.size());
    const auto c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (k + 1 != c.size()) {
            acc = apply(acc);
            if (acc.size() != seed.size())
                throw Error(Errc::DimensionMismatch, "operator changed vector length");
        }
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i < seed.size(); ++i) acc[i] += c[k] * seed[i];
    }
    return acc;
}

std::string format_ascending(const Poly& f) {
    if (f.is_zero()) return "0";
    return format_vector(Vector(f.coeffs().begin(), f.coeffs().end()));
}

std::string format_pretty(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c[i].is_one();
        if (i == 0 || !unit) out += c[i].to_string();
        if (i == 0) continue;
        if (!unit) out += '*';
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

Poly parse_ascending(std::string_view text, FieldSpec spec) { return Poly(spec, parse_vector(text, spec)); }

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << format_pretty(f); }

}  // namespace lrs
