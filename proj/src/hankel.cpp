#include "lrs/hankel.hpp"

#include "lrs/error.hpp"

namespace lrs {

DenseMatrix::DenseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement(spec)) {}

Vector DenseMatrix::multiply(const Vector& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product with wrong length");
    Vector out = zero_vector(spec_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
    return out;
}

DenseMatrix hankel(std::span<const FieldElement> a, std::size_t i, std::size_t r, std::size_t p, FieldSpec spec) {
    DenseMatrix m(spec, r, p);
    if (r == 0 || p == 0) return m;
    if (a.size() < i + r + p - 1)
        throw Error(Errc::InsufficientTerms, "Hankel matrix needs " + std::to_string(i + r + p - 1) + " terms, have " +
                                                 std::to_string(a.size()));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < p; ++k) m(j, k) = a[i + j + k];
    return m;
}

namespace {

// Row-reduces m (and the attached right-hand side, if any) to echelon form;
// returns the pivot column of each pivot row.
std::vector<std::size_t> row_echelon(DenseMatrix& m, Vector* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
            if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
        }
        const FieldElement inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        if (rhs) (*rhs)[row] *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const FieldElement f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
            if (rhs) (*rhs)[r] -= f * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(DenseMatrix m) { return row_echelon(m, nullptr).size(); }

std::optional<Vector> solve(DenseMatrix m, Vector b) {
    if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
    const auto pivots = row_echelon(m, &b);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (!b[r].is_zero()) return std::nullopt;
    Vector x = zero_vector(m.spec(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::optional<std::size_t> first_failing_window(std::span<const FieldElement> a, const Poly& p) {
    if (p.is_zero()) throw Error(Errc::BadInput, "the zero polynomial generates every sequence");
    const auto d = static_cast<std::size_t>(p.degree().value());
    if (a.size() < d + 1)
        throw Error(Errc::InsufficientTerms,
                    "need at least " + std::to_string(d + 1) + " terms, have " + std::to_string(a.size()));
    const auto c = p.coeffs();
    for (std::size_t j = 0; j + d < a.size(); ++j) {
        FieldElement s(p.spec());
        for (std::size_t i = 0; i <= d; ++i) s += c[i] * a[j + i];
        if (!s.is_zero()) return j;
    }
    return std::nullopt;
}

bool is_generating(std::span<const FieldElement> a, const Poly& p) { return !first_failing_window(a, p).has_value(); }

Poly minpoly_hankel(std::span<const FieldElement> a, std::size_t n, FieldSpec spec) {
    if (n < 1) throw Error(Errc::BadInput, "degree bound must be at least 1");
    if (a.size() != 2 * n)
        throw Error(Errc::BadInput, "expected exactly " + std::to_string(2 * n) + " terms, got " + std::to_string(a.size()));
    const std::size_t d = rank(hankel(a, 0, n, n, spec));
    Vector rhs(a.begin() + static_cast<std::ptrdiff_t>(d), a.begin() + static_cast<std::ptrdiff_t>(2 * d));
    const auto g = solve(hankel(a, 0, d, d, spec), std::move(rhs));
    if (!g) throw Error(Errc::NotLinearlyRecurrent, "Hankel system has no solution; degree bound too small");

    std::vector<FieldElement> coeffs;
    coeffs.reserve(d + 1);
    for (const auto& gi : *g) coeffs.push_back(-gi);
    coeffs.push_back(FieldElement::one(spec));
    Poly p(spec, std::move(coeffs));
    if (!is_generating(a, p))
        throw Error(Errc::NotLinearlyRecurrent, "Hankel candidate does not generate the input; degree bound too small");
    return p;
}

}  // namespace lrs
