#pragma once

// Slow, trusted ground truth for minimal polynomials: Hankel matrices and
// exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <span>

#include "lrs/field.hpp"
#include "lrs/polynomial.hpp"

namespace lrs {

class DenseMatrix {
   public:
    DenseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector multiply(const Vector& x) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

   private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

/// r x p matrix with entry (j, k) = a[i + j + k]. Throws InsufficientTerms.
DenseMatrix hankel(std::span<const FieldElement> a, std::size_t i, std::size_t r, std::size_t p, FieldSpec spec);

std::size_t rank(DenseMatrix m);

/// Some x with m*x = b, free variables set to zero; nullopt when inconsistent.
std::optional<Vector> solve(DenseMatrix m, Vector b);

/// Index of the first window j with sum_i p_i a[j+i] != 0, if any.
/// Throws InsufficientTerms when a has fewer than deg P + 1 terms.
std::optional<std::size_t> first_failing_window(std::span<const FieldElement> a, const Poly& p);

bool is_generating(std::span<const FieldElement> a, const Poly& p);

/// Minimal polynomial of a 2n-term prefix via the Hankel rank and the
/// d x d linear system. Throws BadInput or NotLinearlyRecurrent.
Poly minpoly_hankel(std::span<const FieldElement> a, std::size_t n, FieldSpec spec);

}  // namespace lrs
