#pragma once

// Incremental minimal polynomial: terms are drawn from an oracle two at a
// time, and the Euclidean computation resumes after each extension instead of
// restarting. Every division except the most recent one is reused.

#include <cstddef>
#include <functional>

#include "lrs/berlekamp_massey.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

/// State of a resumable computation with half-length bound l.
///
/// euclid.a is S0 = x^{2l} and euclid.b is S1 = sum_i a_{2l-1-i} x^i; the
/// (u0, v0) and (u1, v1) cofactors belong to the remainders r0 and r1.
/// euclid.quotients holds the retained division history, which is what lets
/// an extension step back one generation.
struct LazyState {
    std::size_t l = 0;
    EuclidState euclid;
    TermCache terms;
    /// Division steps performed, including discarded ones.
    std::size_t divisions = 0;
};

/// Draws 2*l0 terms. Throws BadInput when l0 < 1, OracleExhausted.
LazyState lazy_init(SequenceOracle& oracle, std::size_t l0);

/// Divides until deg r1 < l and returns the monic candidate.
Poly lazy_advance(LazyState& s);

/// l += 1 with two more terms, dropping the last division step and
/// rebuilding r0, r1 from the retained cofactors against the new S0, S1.
void lazy_extend(LazyState& s);

/// Decides whether a candidate is the minimal polynomial. `used` is the
/// number of terms the candidate was computed from; further terms may be
/// drawn through the cache.
using Verifier = std::function<bool(const Poly& candidate, TermCache& terms, std::size_t used)>;

/// Accepts P iff it generates every cached term plus `extra` terms past
/// `used`. Heuristic: a candidate is only proven once 2m terms are checked.
Verifier default_verifier(std::size_t extra);

/// Accepts P iff P(M) seed = 0. Throws DimensionMismatch.
Verifier matrix_verifier(SparseMatrix m, Vector seed);

/// Called after every lazy_advance with the state it left behind.
using LazyObserver = std::function<void(const LazyState&)>;

std::size_t default_initial_bound(std::size_t m) noexcept;

/// Minimal polynomial of a sequence with one of degree <= m. Stops as soon
/// as the verifier accepts a candidate; at l = m the 2m-term candidate is
/// returned after checking it against every cached term. Throws
/// NotLinearlyRecurrent, OracleExhausted, BadInput.
Poly lazy_minpoly(SequenceOracle& oracle, std::size_t m, std::size_t l0, const Verifier& verifier,
                  const LazyObserver& observer = {});

}  // namespace lrs
