#pragma once

// Berlekamp-Massey as an extended Euclidean algorithm on (x^{2n}, series).
//
// Both batch variants share one engine. The usual variant feeds the series
// a_0 + a_1 x + ... and reverses the cofactor on exit; the modified variant
// feeds the reversed series a_{2n-1} + a_{2n-2} x + ... and reads the minimal
// polynomial directly off the cofactor V.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lrs/field.hpp"
#include "lrs/polynomial.hpp"

namespace lrs {

/// Two consecutive generations of the extended Euclidean algorithm on (A, B).
/// Invariant: u0*A + v0*B == r0 and u1*A + v1*B == r1.
struct EuclidState {
    Poly a;
    Poly b;
    Poly r0, r1;
    Poly u0, v0;
    Poly u1, v1;
    std::size_t steps = 0;
    std::vector<Poly> quotients;
};

/// r0 = A, r1 = B, identity cofactors. Throws DivisionByZero when A = 0.
EuclidState euclid_init(Poly a, Poly b);

/// One division step; requires r1 != 0.
void euclid_step(EuclidState& s);

using EuclidObserver = std::function<void(const EuclidState&)>;

/// Steps while threshold <= deg r1. The observer, if set, sees every
/// intermediate state after its step.
void euclid_run(EuclidState& s, int threshold, const EuclidObserver& observer = {});

bool bezout_holds(const EuclidState& s);

/// Full record of one batch run, for callers that inspect intermediates.
struct BmRun {
    Poly minpoly;
    EuclidState state;
    /// Reversal degree of the usual variant; deg of the result for the modified one.
    int exit_degree = 0;
};

/// Reversed series sum_i a_{2n-1-i} x^i.
Poly reversed_series(std::span<const FieldElement> a, FieldSpec spec);
/// Series sum_i a_i x^i.
Poly forward_series(std::span<const FieldElement> a, FieldSpec spec);

BmRun run_bm_modified(std::size_t n, std::span<const FieldElement> a, FieldSpec spec,
                      const EuclidObserver& observer = {});
BmRun run_bm_usual(std::size_t n, std::span<const FieldElement> a, FieldSpec spec,
                   const EuclidObserver& observer = {});

/// Minimal polynomial from the first 2n terms, assuming one of degree <= n
/// exists. Throws BadInput on a malformed call and NotLinearlyRecurrent when
/// the result does not generate the input.
Poly bm_modified(std::size_t n, std::span<const FieldElement> a, FieldSpec spec);
Poly bm_usual(std::size_t n, std::span<const FieldElement> a, FieldSpec spec);

}  // namespace lrs
