#include "lrs/lazy.hpp"

#include <algorithm>
#include <utility>

#include "lrs/error.hpp"
#include "lrs/hankel.hpp"

namespace lrs {

LazyState lazy_init(SequenceOracle& oracle, std::size_t l0) {
    if (l0 < 1) throw Error(Errc::BadInput, "initial bound must be at least 1");
    TermCache terms(oracle);
    terms.ensure(2 * l0);
    const FieldSpec spec = oracle.spec();
    EuclidState e = euclid_init(Poly::x_pow(spec, 2 * l0), reversed_series(terms.terms().first(2 * l0), spec));
    return LazyState{.l = l0, .euclid = std::move(e), .terms = std::move(terms)};
}

Poly lazy_advance(LazyState& s) {
    euclid_run(s.euclid, static_cast<int>(s.l), [&s](const EuclidState&) { ++s.divisions; });
    return monic(s.euclid.v1);
}

void lazy_extend(LazyState& s) {
    ++s.l;
    const FieldElement hi = s.terms.at(2 * s.l - 2);
    const FieldElement lo = s.terms.at(2 * s.l - 1);
    EuclidState& e = s.euclid;
    const FieldSpec spec = e.a.spec();
    e.a = e.a.shifted(2);
    e.b = e.b.shifted(2) + Poly(spec, {lo, hi});

    if (!e.quotients.empty()) {
        // Undo u1 = u0_before - q*u0: the generation before (u0, v0) is u1 + q*u0.
        const Poly q = std::move(e.quotients.back());
        e.quotients.pop_back();
        --e.steps;
        Poly u_before = e.u1 + q * e.u0;
        Poly v_before = e.v1 + q * e.v0;
        e.u1 = std::exchange(e.u0, std::move(u_before));
        e.v1 = std::exchange(e.v0, std::move(v_before));
    }
    e.r0 = e.u0 * e.a + e.v0 * e.b;
    e.r1 = e.u1 * e.a + e.v1 * e.b;
}

Verifier default_verifier(std::size_t extra) {
    if (extra < 1) throw Error(Errc::BadInput, "default verifier needs at least one extra term");
    return [extra](const Poly& candidate, TermCache& terms, std::size_t used) {
        terms.ensure(used + extra);
        return is_generating(terms.terms(), candidate);
    };
}

Verifier matrix_verifier(SparseMatrix m, Vector seed) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "verifier matrix must be square");
    if (seed.size() != m.cols())
        throw Error(Errc::DimensionMismatch, "seed of length " + std::to_string(seed.size()) + " for a " +
                                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    return [m = std::move(m), seed = std::move(seed)](const Poly& candidate, TermCache&, std::size_t) {
        const Vector image = eval_at_operator(
            candidate, [&m](const Vector& x) { return m.multiply(x); }, seed);
        return std::all_of(image.begin(), image.end(), [](const FieldElement& c) { return c.is_zero(); });
    };
}

std::size_t default_initial_bound(std::size_t m) noexcept { return std::max<std::size_t>(1, m / 4); }

Poly lazy_minpoly(SequenceOracle& oracle, std::size_t m, std::size_t l0, const Verifier& verifier,
                  const LazyObserver& observer) {
    if (m < 1) throw Error(Errc::BadInput, "degree bound must be at least 1");
    if (l0 < 1 || l0 > m) throw Error(Errc::BadInput, "initial bound must lie in [1, m]");
    LazyState s = lazy_init(oracle, l0);
    for (;;) {
        Poly candidate = lazy_advance(s);
        if (observer) observer(s);
        if (s.l == m) {
            if (const auto j = first_failing_window(s.terms.terms(), candidate))
                throw Error(Errc::NotLinearlyRecurrent,
                            "final candidate fails at window " + std::to_string(*j) + "; degree bound too small");
            return candidate;
        }
        if (verifier(candidate, s.terms, 2 * s.l)) return candidate;
        lazy_extend(s);
    }
}

}  // namespace lrs
