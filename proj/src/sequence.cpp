#include "lrs/sequence.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lrs/error.hpp"

namespace lrs {

FieldElement SequenceOracle::next() {
    FieldElement term = produce(served_);
    ++served_;
    return term;
}

void SequenceOracle::reset() {
    rewind();
    served_ = 0;
}

SparseMatrix::SparseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : spec_(spec), rows_(rows), cols_(cols) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& e : entries) {
        if (e.row >= rows || e.col >= cols)
            throw Error(Errc::DimensionMismatch, "entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                                     ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                                     " matrix");
        if (e.value.spec() != spec) throw Error(Errc::FieldMismatch, "matrix entry over " + e.value.spec().to_string());
        if (!seen.emplace(e.row, e.col).second)
            throw Error(Errc::BadInput, "repeated entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) + ")");
        if (!e.value.is_zero()) entries_.push_back(std::move(e));
    }
}

SparseMatrix SparseMatrix::identity(FieldSpec spec, std::size_t n) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, FieldElement::one(spec)});
    return SparseMatrix(spec, n, n, std::move(entries));
}

SparseMatrix SparseMatrix::companion(const Poly& p) { return block_companion(std::span<const Poly>(&p, 1)); }

SparseMatrix SparseMatrix::block_companion(std::span<const Poly> blocks) {
    if (blocks.empty()) throw Error(Errc::BadInput, "no companion blocks");
    const FieldSpec spec = blocks.front().spec();
    std::vector<Entry> entries;
    std::size_t offset = 0;
    for (const auto& p : blocks) {
        if (!p.is_monic() || p.degree() < 1) throw Error(Errc::NotMonic, "companion block must be monic of degree >= 1");
        const auto d = static_cast<std::size_t>(p.degree().value());
        for (std::size_t i = 1; i < d; ++i) entries.push_back({offset + i, offset + i - 1, FieldElement::one(spec)});
        for (std::size_t i = 0; i < d; ++i) entries.push_back({offset + i, offset + d - 1, -p.coeff(i)});
        offset += d;
    }
    return SparseMatrix(spec, offset, offset, std::move(entries));
}

Vector SparseMatrix::multiply(const Vector& x) const {
    if (x.size() != cols_)
        throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(x.size()) + " for " +
                                                 std::to_string(cols_) + " columns");
    Vector y = zero_vector(spec_, rows_);
    for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

Vector spmv(const SparseMatrix& m, const Vector& x) { return m.multiply(x); }

SparseMatrix parse_sparse_matrix(std::istream& in, FieldSpec spec) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> rows >> cols >> nnz)) throw Error(Errc::ParseError, "matrix header must be 'rows cols nnz'");
    std::vector<SparseMatrix::Entry> entries;
    entries.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::string value;
        if (!(in >> r >> c >> value))
            throw Error(Errc::ParseError, "matrix entry " + std::to_string(k) + " must be 'r c value'");
        entries.push_back({r, c, FieldElement::parse(value, spec)});
    }
    std::string trailing;
    if (in >> trailing) throw Error(Errc::ParseError, "unexpected text after " + std::to_string(nnz) + " matrix entries");
    return SparseMatrix(spec, rows, cols, std::move(entries));
}

namespace {

class ListOracle final : public SequenceOracle {
   public:
    ListOracle(std::vector<FieldElement> terms, FieldSpec spec) : SequenceOracle(spec), terms_(std::move(terms)) {}

   protected:
    FieldElement produce(std::size_t t) override {
        if (t >= terms_.size())
            throw Error(Errc::OracleExhausted, "sequence has only " + std::to_string(terms_.size()) + " terms");
        return terms_[t];
    }
    void rewind() override {}

   private:
    std::vector<FieldElement> terms_;
};

class RecurrenceOracle final : public SequenceOracle {
   public:
    RecurrenceOracle(Poly p, std::vector<FieldElement> init)
        : SequenceOracle(p.spec()), p_(std::move(p)), init_(std::move(init)), window_(init_.begin(), init_.end()) {}

   protected:
    FieldElement produce(std::size_t t) override {
        if (t < init_.size()) return init_[t];
        FieldElement next(spec());
        for (std::size_t i = 0; i < window_.size(); ++i) next -= p_.coeff(i) * window_[i];
        if (!window_.empty()) {
            window_.pop_front();
            window_.push_back(next);
        }
        return next;
    }
    void rewind() override { window_.assign(init_.begin(), init_.end()); }

   private:
    Poly p_;
    std::vector<FieldElement> init_;
    std::deque<FieldElement> window_;
};

FieldElement dot(const Vector& u, const Vector& w, FieldSpec spec) {
    FieldElement s(spec);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
    return s;
}

class KrylovOracle final : public SequenceOracle {
   public:
    KrylovOracle(SparseMatrix m, Vector u, Vector v)
        : SequenceOracle(m.spec()), m_(std::move(m)), u_(std::move(u)), v_(std::move(v)), w_(v_) {}

   protected:
    FieldElement produce(std::size_t t) override {
        if (t > 0) w_ = m_.multiply(w_);
        return dot(u_, w_, spec());
    }
    void rewind() override { w_ = v_; }

   private:
    SparseMatrix m_;
    Vector u_;
    Vector v_;
    Vector w_;
};

}  // namespace

std::unique_ptr<SequenceOracle> from_list(std::vector<FieldElement> terms, FieldSpec spec) {
    for (const auto& t : terms)
        if (t.spec() != spec) throw Error(Errc::FieldMismatch, "term over " + t.spec().to_string());
    return std::make_unique<ListOracle>(std::move(terms), spec);
}

std::unique_ptr<SequenceOracle> from_recurrence(const Poly& p, std::vector<FieldElement> init) {
    if (!p.is_monic()) throw Error(Errc::NotMonic, "recurrence polynomial must be monic");
    const auto d = static_cast<std::size_t>(p.degree().value());
    if (init.size() != d)
        throw Error(Errc::BadInitLength, "degree " + std::to_string(d) + " recurrence needs " + std::to_string(d) +
                                             " initial terms, got " + std::to_string(init.size()));
    for (const auto& t : init)
        if (t.spec() != p.spec()) throw Error(Errc::FieldMismatch, "initial term over " + t.spec().to_string());
    return std::make_unique<RecurrenceOracle>(p, std::move(init));
}

std::unique_ptr<SequenceOracle> krylov_oracle(SparseMatrix m, Vector u, Vector v) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "Krylov matrix must be square");
    if (u.size() != m.rows() || v.size() != m.rows())
        throw Error(Errc::DimensionMismatch, "projection vectors must have length " + std::to_string(m.rows()));
    return std::make_unique<KrylovOracle>(std::move(m), std::move(u), std::move(v));
}

const FieldElement& TermCache::at(std::size_t t) {
    ensure(t + 1);
    return terms_[t];
}

void TermCache::ensure(std::size_t n) {
    while (terms_.size() < n) terms_.push_back(oracle_->next());
}

}  // namespace lrs
