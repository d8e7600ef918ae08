#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// Euclid engine or the Hankel solver.

#include <cstdint>
#include <random>
#include <vector>

#include "lrs/field.hpp"
#include "lrs/polynomial.hpp"

namespace lrs::test {

inline const FieldSpec kQ = FieldSpec::rationals();
inline const FieldSpec kGF1009 = FieldSpec::prime(1009);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
    }

    FieldElement element(FieldSpec spec) {
        if (spec.is_prime()) return FieldElement::from_int(static_cast<long>(uniform(0, spec.modulus() - 1)), spec);
        const long num = static_cast<long>(uniform(0, 40)) - 20;
        const long den = static_cast<long>(uniform(1, 9));
        return FieldElement::canonical(num, den, spec);
    }

    FieldElement nonzero(FieldSpec spec) {
        for (;;) {
            FieldElement e = element(spec);
            if (!e.is_zero()) return e;
        }
    }

    Vector vector(FieldSpec spec, std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(element(spec));
        return v;
    }

    /// Degree at most max_degree, possibly zero.
    Poly poly(FieldSpec spec, std::size_t max_degree) { return Poly(spec, vector(spec, max_degree + 1)); }

    Poly monic(FieldSpec spec, std::size_t degree) {
        Vector c = vector(spec, degree);
        c.push_back(FieldElement::one(spec));
        return Poly(spec, std::move(c));
    }

   private:
    std::mt19937_64 gen_;
};

/// First `count` terms of a_{j+d} = -sum p_i a_{j+i}, computed directly.
inline Vector recurrence_terms(const Poly& p, const Vector& init, std::size_t count) {
    const auto d = static_cast<std::size_t>(p.degree().value());
    Vector a = init;
    while (a.size() < count) {
        FieldElement next(p.spec());
        const std::size_t j = a.size() - d;
        for (std::size_t i = 0; i < d; ++i) next -= p.coeff(i) * a[j + i];
        a.push_back(next);
    }
    a.resize(count, FieldElement(p.spec()));
    return a;
}

inline Vector ints(FieldSpec spec, std::initializer_list<long> values) {
    Vector v;
    for (long x : values) v.push_back(FieldElement::from_int(x, spec));
    return v;
}

using Dense = std::vector<Vector>;

inline Dense dense_identity(FieldSpec spec, std::size_t n) {
    Dense m(n, zero_vector(spec, n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldElement::one(spec);
    return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b, FieldSpec spec) {
    Dense c(a.size(), zero_vector(spec, b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b.front().size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Vector dense_apply(const Dense& a, const Vector& x, FieldSpec spec) {
    Vector y = zero_vector(spec, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

/// sum_i f_i M^i by explicit matrix powers.
inline Dense dense_poly_at(const Poly& f, const Dense& m, FieldSpec spec) {
    const std::size_t n = m.size();
    Dense acc(n, zero_vector(spec, n));
    Dense power = dense_identity(spec, n);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) acc[r][c] += f.coeffs()[i] * power[r][c];
        power = dense_mul(power, m, spec);
    }
    return acc;
}

inline FieldElement determinant_cofactor(const Dense& m, FieldSpec spec) {
    const std::size_t n = m.size();
    if (n == 0) return FieldElement::one(spec);
    FieldElement det(spec);
    for (std::size_t c = 0; c < n; ++c) {
        Dense minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        FieldElement term = m[0][c] * determinant_cofactor(minor, spec);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

/// Plain remainder-sequence gcd, made monic.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a);
}

inline Poly poly_lcm(const Poly& a, const Poly& b) { return monic(divmod(a * b, poly_gcd(a, b)).quotient); }

inline bool divides(const Poly& d, const Poly& f) { return divmod(f, d).remainder.is_zero(); }

}  // namespace lrs::test
