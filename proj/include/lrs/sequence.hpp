#pragma once

// Producers of sequence terms: explicit lists, linear recurrences and
// Krylov projections u . M^t v of a sparse matrix.

#include <cstddef>
#include <deque>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lrs/field.hpp"
#include "lrs/polynomial.hpp"

namespace lrs {

/// Serves a_0, a_1, ... in order. Single owner; not thread safe.
class SequenceOracle {
   public:
    explicit SequenceOracle(FieldSpec spec) : spec_(spec) {}
    virtual ~SequenceOracle() = default;

    SequenceOracle(const SequenceOracle&) = delete;
    SequenceOracle& operator=(const SequenceOracle&) = delete;

    /// Throws OracleExhausted past the end of a finite source.
    FieldElement next();
    /// Rewinds to a_0; the terms served afterwards repeat the same prefix.
    void reset();

    std::size_t terms_served() const noexcept { return served_; }
    const FieldSpec& spec() const noexcept { return spec_; }

   protected:
    virtual FieldElement produce(std::size_t t) = 0;
    virtual void rewind() = 0;

   private:
    FieldSpec spec_;
    std::size_t served_ = 0;
};

class SparseMatrix {
   public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        FieldElement value;
    };

    /// Zero values are dropped. Throws DimensionMismatch on an out-of-range
    /// index and BadInput on a repeated (row, col).
    SparseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<Entry> entries);

    static SparseMatrix identity(FieldSpec spec, std::size_t n);
    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// -p_i in the last column, so that e_0 is a cyclic vector.
    static SparseMatrix companion(const Poly& p);
    /// Block diagonal of the companions of each polynomial.
    static SparseMatrix block_companion(std::span<const Poly> blocks);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }
    std::span<const Entry> entries() const noexcept { return entries_; }

    Vector multiply(const Vector& x) const;

   private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

/// Throws DimensionMismatch unless cols == x.size().
Vector spmv(const SparseMatrix& m, const Vector& x);

/// "rows cols nnz" then nnz lines of "r c value", 0-indexed.
SparseMatrix parse_sparse_matrix(std::istream& in, FieldSpec spec);

std::unique_ptr<SequenceOracle> from_list(std::vector<FieldElement> terms, FieldSpec spec);
/// a_{j+d} = -sum_{i<d} p_i a_{j+i}, starting from `init`. Throws NotMonic
/// or BadInitLength. The constant 1 produces the zero sequence.
std::unique_ptr<SequenceOracle> from_recurrence(const Poly& p, std::vector<FieldElement> init);
/// a_t = u . (M^t v), one sparse product per new term.
std::unique_ptr<SequenceOracle> krylov_oracle(SparseMatrix m, Vector u, Vector v);

/// Memoizing front end to an oracle: term t is drawn once and kept.
class TermCache {
   public:
    explicit TermCache(SequenceOracle& oracle) : oracle_(&oracle) {}

    const FieldElement& at(std::size_t t);
    /// Draws terms until at least n are cached.
    void ensure(std::size_t n);

    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const FieldElement> terms() const noexcept { return terms_; }
    const FieldSpec& spec() const noexcept { return oracle_->spec(); }
    SequenceOracle& oracle() noexcept { return *oracle_; }

   private:
    SequenceOracle* oracle_;
    std::vector<FieldElement> terms_;
};

}  // namespace lrs
