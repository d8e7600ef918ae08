#include "lrs/berlekamp_massey.hpp"

#include <algorithm>
#include <utility>

#include "lrs/error.hpp"
#include "lrs/hankel.hpp"

namespace lrs {

EuclidState euclid_init(Poly a, Poly b) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "Euclid first input is zero");
    const FieldSpec spec = a.spec();
    EuclidState s{.a = a,
                  .b = b,
                  .r0 = a,
                  .r1 = b,
                  .u0 = Poly::constant(FieldElement::one(spec)),
                  .v0 = Poly(spec),
                  .u1 = Poly(spec),
                  .v1 = Poly::constant(FieldElement::one(spec)),
                  .steps = 0,
                  .quotients = {}};
    return s;
}

void euclid_step(EuclidState& s) {
    auto [q, r] = divmod(s.r0, s.r1);
    Poly v = s.v0 - q * s.v1;
    Poly u = s.u0 - q * s.u1;
    s.v0 = std::exchange(s.v1, std::move(v));
    s.u0 = std::exchange(s.u1, std::move(u));
    s.r0 = std::exchange(s.r1, std::move(r));
    s.quotients.push_back(std::move(q));
    ++s.steps;
}

void euclid_run(EuclidState& s, int threshold, const EuclidObserver& observer) {
    while (Degree(threshold) <= s.r1.degree()) {
        euclid_step(s);
        if (observer) observer(s);
    }
}

bool bezout_holds(const EuclidState& s) {
    return s.u0 * s.a + s.v0 * s.b == s.r0 && s.u1 * s.a + s.v1 * s.b == s.r1;
}

Poly reversed_series(std::span<const FieldElement> a, FieldSpec spec) {
    return Poly(spec, std::vector<FieldElement>(a.rbegin(), a.rend()));
}

Poly forward_series(std::span<const FieldElement> a, FieldSpec spec) {
    return Poly(spec, std::vector<FieldElement>(a.begin(), a.end()));
}

namespace {

void check_input(std::size_t n, std::span<const FieldElement> a, FieldSpec spec) {
    if (n < 1) throw Error(Errc::BadInput, "degree bound must be at least 1");
    if (a.size() != 2 * n)
        throw Error(Errc::BadInput, "expected exactly " + std::to_string(2 * n) + " terms, got " + std::to_string(a.size()));
    for (const auto& t : a)
        if (t.spec() != spec) throw Error(Errc::FieldMismatch, "term over " + t.spec().to_string());
}

void check_generating(std::span<const FieldElement> a, const Poly& p) {
    if (const auto j = first_failing_window(a, p))
        throw Error(Errc::NotLinearlyRecurrent,
                    "result fails the recurrence at window " + std::to_string(*j) + "; degree bound too small");
}

}  // namespace

BmRun run_bm_modified(std::size_t n, std::span<const FieldElement> a, FieldSpec spec, const EuclidObserver& observer) {
    check_input(n, a, spec);
    EuclidState s = euclid_init(Poly::x_pow(spec, 2 * n), reversed_series(a, spec));
    euclid_run(s, static_cast<int>(n), observer);
    Poly p = monic(s.v1);
    const int d = p.degree().value();
    return {std::move(p), std::move(s), d};
}

BmRun run_bm_usual(std::size_t n, std::span<const FieldElement> a, FieldSpec spec, const EuclidObserver& observer) {
    check_input(n, a, spec);
    EuclidState s = euclid_init(Poly::x_pow(spec, 2 * n), forward_series(a, spec));
    euclid_run(s, static_cast<int>(n), observer);
    // 1 + deg(0) is taken as 0.
    const int after_remainder = s.r1.is_zero() ? 0 : s.r1.degree().value() + 1;
    const int d = std::max(s.v1.degree().value(), after_remainder);
    Poly p = monic(reverse_at(s.v1, d));
    return {std::move(p), std::move(s), d};
}

Poly bm_modified(std::size_t n, std::span<const FieldElement> a, FieldSpec spec) {
    BmRun run = run_bm_modified(n, a, spec);
    check_generating(a, run.minpoly);
    return std::move(run.minpoly);
}

Poly bm_usual(std::size_t n, std::span<const FieldElement> a, FieldSpec spec) {
    BmRun run = run_bm_usual(n, a, spec);
    check_generating(a, run.minpoly);
    return std::move(run.minpoly);
}

}  // namespace lrs
