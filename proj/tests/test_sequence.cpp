#include <doctest.h>

#include <sstream>

#include "lrs/berlekamp_massey.hpp"
#include "lrs/error.hpp"
#include "lrs/sequence.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::test::ints;
using lrs::test::kGF1009;
using lrs::test::kQ;

namespace {

Vector draw(SequenceOracle& o, std::size_t n) {
    Vector out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(o.next());
    return out;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an lrs::Error");
    return Errc::BadInput;
}

}  // namespace

TEST_CASE("from_list") {
    auto o = from_list(ints(kQ, {1, 2, 7, -9, 2, 7}), kQ);
    CHECK(draw(*o, 6) == ints(kQ, {1, 2, 7, -9, 2, 7}));
    CHECK(o->terms_served() == 6);
    CHECK(code_of([&] { o->next(); }) == Errc::OracleExhausted);
    CHECK(o->terms_served() == 6);

    auto empty = from_list({}, kQ);
    CHECK(code_of([&] { empty->next(); }) == Errc::OracleExhausted);

    auto single = from_list(ints(kQ, {5}), kQ);
    CHECK(single->next() == FieldElement::from_int(5, kQ));
    CHECK(code_of([&] { single->next(); }) == Errc::OracleExhausted);
}

TEST_CASE("from_recurrence") {
    auto fib = from_recurrence(parse_ascending("-1 -1 1", kQ), ints(kQ, {0, 1}));
    CHECK(draw(*fib, 7) == ints(kQ, {0, 1, 1, 2, 3, 5, 8}));

    auto paper = from_recurrence(parse_ascending("0 1 1 1", kQ), ints(kQ, {1, 2, 7}));
    CHECK(draw(*paper, 6) == ints(kQ, {1, 2, 7, -9, 2, 7}));

    auto zero = from_recurrence(parse_ascending("1", kQ), {});
    CHECK(draw(*zero, 4) == ints(kQ, {0, 0, 0, 0}));

    CHECK(code_of([] { from_recurrence(parse_ascending("1 2", kQ), ints(kQ, {1})); }) == Errc::NotMonic);
    CHECK(code_of([] { from_recurrence(Poly(kQ), {}); }) == Errc::NotMonic);
    CHECK(code_of([] { from_recurrence(parse_ascending("1 1", kQ), ints(kQ, {1, 2})); }) == Errc::BadInitLength);
}

TEST_CASE("spmv") {
    const Vector x = ints(kQ, {4, -2, 7});
    CHECK(spmv(SparseMatrix::identity(kQ, 3), x) == x);
    CHECK(spmv(SparseMatrix(kQ, 3, 3, {}), x) == zero_vector(kQ, 3));
    const SparseMatrix m(kQ, 2, 2,
                         {{0, 1, FieldElement::one(kQ)}, {1, 0, FieldElement::one(kQ)}, {1, 1, FieldElement::one(kQ)}});
    CHECK(spmv(m, ints(kQ, {1, 0})) == ints(kQ, {0, 1}));
    CHECK(code_of([&] { spmv(m, x); }) == Errc::DimensionMismatch);

    const test::Dense rect = {ints(kQ, {1, 0, 2}), ints(kQ, {0, 3, 0})};
    const SparseMatrix sr(kQ, 2, 3,
                          {{0, 0, FieldElement::from_int(1, kQ)},
                           {0, 2, FieldElement::from_int(2, kQ)},
                           {1, 1, FieldElement::from_int(3, kQ)},
                           {1, 2, FieldElement::zero(kQ)}});
    CHECK(sr.entries().size() == 3);
    CHECK(spmv(sr, x) == test::dense_apply(rect, x, kQ));

    CHECK(code_of([] { SparseMatrix(kQ, 2, 2, {{2, 0, FieldElement::one(kQ)}}); }) == Errc::DimensionMismatch);
    CHECK(code_of([] {
              SparseMatrix(kQ, 2, 2, {{0, 0, FieldElement::one(kQ)}, {0, 0, FieldElement::one(kQ)}});
          }) == Errc::BadInput);
}

TEST_CASE("sparse matrix text format") {
    std::istringstream in("2 2 3\n0 1 1\n1 0 1\n1 1 -1/2\n");
    const auto m = parse_sparse_matrix(in, kQ);
    CHECK(m.rows() == 2);
    CHECK(m.entries().size() == 3);
    CHECK(spmv(m, ints(kQ, {2, 2})) == parse_vector("2 1", kQ));

    std::istringstream short_in("2 2 2\n0 0 1\n");
    CHECK(code_of([&] { parse_sparse_matrix(short_in, kQ); }) == Errc::ParseError);
    std::istringstream bad_header("two 2 0");
    CHECK(code_of([&] { parse_sparse_matrix(bad_header, kQ); }) == Errc::ParseError);
}

TEST_CASE("companion matrices") {
    const auto p = parse_ascending("-1 -1 1", kQ);
    const auto c = SparseMatrix::companion(p);
    CHECK(spmv(c, ints(kQ, {1, 0})) == ints(kQ, {0, 1}));
    CHECK(spmv(c, ints(kQ, {0, 1})) == ints(kQ, {1, 1}));

    const std::vector<Poly> blocks = {parse_ascending("2 1", kQ), p};
    const auto b = SparseMatrix::block_companion(blocks);
    CHECK(b.rows() == 3);
    CHECK(spmv(b, ints(kQ, {1, 1, 0})) == ints(kQ, {-2, 0, 1}));
}

TEST_CASE("krylov_oracle") {
    auto id = krylov_oracle(SparseMatrix::identity(kQ, 3), ints(kQ, {1, 0, 0}), ints(kQ, {1, 0, 0}));
    CHECK(draw(*id, 4) == ints(kQ, {1, 1, 1, 1}));

    // a_t = (C^t)_{11} by explicit powering
    const test::Dense c = {ints(kQ, {0, 1}), ints(kQ, {1, 1})};
    test::Dense power = test::dense_identity(kQ, 2);
    Vector expected;
    for (int t = 0; t <= 5; ++t) {
        expected.push_back(power[0][0]);
        power = test::dense_mul(power, c, kQ);
    }
    CHECK(expected == ints(kQ, {1, 0, 1, 1, 2, 3}));
    auto comp = krylov_oracle(SparseMatrix::companion(parse_ascending("-1 -1 1", kQ)), ints(kQ, {1, 0}),
                              ints(kQ, {1, 0}));
    CHECK(draw(*comp, 6) == expected);

    auto zero = krylov_oracle(SparseMatrix(kQ, 2, 2, {}), ints(kQ, {2, 3}), ints(kQ, {5, 7}));
    CHECK(draw(*zero, 3) == ints(kQ, {31, 0, 0}));

    CHECK(code_of([] { krylov_oracle(SparseMatrix(kQ, 2, 3, {}), ints(kQ, {1, 0}), ints(kQ, {1, 0})); }) ==
          Errc::DimensionMismatch);
    CHECK(code_of([] { krylov_oracle(SparseMatrix(kQ, 2, 2, {}), ints(kQ, {1}), ints(kQ, {1, 0})); }) ==
          Errc::DimensionMismatch);
}

TEST_CASE("oracles replay the same prefix after reset") {
    test::Rng rng(51);
    const auto p = rng.monic(kGF1009, 5);
    std::vector<std::unique_ptr<SequenceOracle>> oracles;
    oracles.push_back(from_list(rng.vector(kGF1009, 20), kGF1009));
    oracles.push_back(from_recurrence(p, rng.vector(kGF1009, 5)));
    oracles.push_back(krylov_oracle(SparseMatrix::companion(p), rng.vector(kGF1009, 5), rng.vector(kGF1009, 5)));
    for (auto& o : oracles) {
        const auto first = draw(*o, 12);
        o->reset();
        CHECK(o->terms_served() == 0);
        CHECK(draw(*o, 12) == first);
        CHECK(o->terms_served() == 12);
    }
}

TEST_CASE("minimal polynomial of a recurrence divides its polynomial") {
    test::Rng rng(52);
    int equal = 0;
    const int trials = 300;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t d = rng.uniform(1, 8);
        const auto p = rng.monic(kGF1009, d);
        auto o = from_recurrence(p, rng.vector(kGF1009, d));
        const auto a = draw(*o, 2 * (d + 2));
        CHECK(a == test::recurrence_terms(p, Vector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(d)), a.size()));
        const auto mp = bm_modified(d + 2, a, kGF1009);
        CHECK(test::divides(mp, p));
        if (mp == p) ++equal;
    }
    MESSAGE("minimal polynomial equals the recurrence in " << equal << " of " << trials << " trials");
    CHECK(equal > trials * 9 / 10);
}

TEST_CASE("Krylov minimal polynomial divides the matrix minimal polynomial") {
    test::Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Poly> blocks;
        const std::size_t count = rng.uniform(1, 3);
        Poly lcm = Poly::constant(FieldElement::one(kGF1009));
        std::size_t size = 0;
        for (std::size_t i = 0; i < count; ++i) {
            blocks.push_back(rng.monic(kGF1009, rng.uniform(1, 5)));
            if (i > 0 && rng.uniform(0, 2) == 0) blocks.back() = blocks.front();
            lcm = test::poly_lcm(lcm, blocks.back());
            size += static_cast<std::size_t>(blocks.back().degree().value());
        }
        auto o = krylov_oracle(SparseMatrix::block_companion(blocks), rng.vector(kGF1009, size),
                               rng.vector(kGF1009, size));
        const auto a = draw(*o, 2 * size);
        CHECK(test::divides(bm_modified(size, a, kGF1009), lcm));
    }
}

TEST_CASE("term cache") {
    auto o = from_list(ints(kQ, {1, 2, 3}), kQ);
    TermCache cache(*o);
    CHECK(cache.at(1) == FieldElement::from_int(2, kQ));
    CHECK(cache.size() == 2);
    CHECK(cache.at(0) == FieldElement::from_int(1, kQ));
    CHECK(o->terms_served() == 2);
    cache.ensure(3);
    CHECK(o->terms_served() == 3);
    CHECK(code_of([&] { cache.ensure(4); }) == Errc::OracleExhausted);
}
