#pragma once

// Exact matrix algebra over k, k[t] and the local ring O.

#include <cstddef>
#include <vector>

#include "semieuler/matrix.hpp"
#include "semieuler/scalars.hpp"

namespace semieuler {

using MatrixLocal = Matrix<LocalScalar>;
using MatrixField = Matrix<FieldElem>;
using MatrixPoly = Matrix<Poly>;

MatrixLocal zero_matrix(std::size_t rows, std::size_t cols, const RingPtr& ring);
MatrixLocal identity_matrix(std::size_t n, const RingPtr& ring);
MatrixField field_zero_matrix(std::size_t rows, std::size_t cols, BaseField field);

/// Entrywise evaluation at t = s; PoleAtPoint if some denominator vanishes.
MatrixField evaluate(const MatrixLocal& a, const FieldElem& s);
/// Evaluation at the base point s0 (the reduction to the residue field).
MatrixField reduce(const MatrixLocal& a);

/// Fraction-free (Bareiss) elimination over an integral domain T with exact
/// division. Returns the rank; on return `a` holds the echelon form.
template <typename T>
std::size_t bareiss_eliminate(Matrix<T>& a, int* swap_sign = nullptr)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    T prev = a.zero().one_like();
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).is_zero())
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r) {
            a.swap_rows(piv, r);
            sign = -sign;
        }
        const T pivot = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const T lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                T v = pivot * a(i, j) - lead * a(r, j);
                a(i, j) = v.is_zero() ? v : v / prev;
            }
            a(i, c) = a.zero();
        }
        prev = pivot;
        ++r;
    }
    if (swap_sign)
        *swap_sign = sign;
    return r;
}

/// Determinant by Bareiss elimination; the last pivot is the determinant.
template <typename T>
T bareiss_determinant(Matrix<T> a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "determinant of " + a.shape());
    const std::size_t n = a.rows();
    if (n == 0)
        return a.zero().one_like();
    int sign = 1;
    if (bareiss_eliminate(a, &sign) < n)
        return a.zero();
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

template <typename T>
bool is_skew(const Matrix<T>& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "skew test on " + a.shape());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, i).is_zero())
            return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (!(a(i, j) + a(j, i)).is_zero())
                return false;
    }
    return true;
}

std::size_t rank(const MatrixField& a);
/// Rank over k of A(s).
std::size_t rank_at(const MatrixLocal& a, const FieldElem& s);
/// Rank over the fraction field k(t).
std::size_t rank_generic(const MatrixLocal& a);
LocalScalar determinant(const MatrixLocal& a);
FieldElem determinant(const MatrixField& a);

/// Rows scaled by the lcm of their denominators: same rank over k(t), and
/// the determinant changes by the product of the returned multipliers.
MatrixPoly clear_denominators(const MatrixLocal& a, std::vector<Poly>* multipliers = nullptr);

/// U * A * V = diag(pi^e_1, ..., pi^e_r, 0, ...), U and V invertible over O.
struct SmithDecomposition {
    MatrixLocal u;
    MatrixLocal v;
    std::vector<std::size_t> exponents;  // ascending

    std::size_t rank() const noexcept { return exponents.size(); }
    /// The diagonal matrix U*A*V should equal, with the given shape.
    MatrixLocal diagonal(std::size_t rows, std::size_t cols) const;
};

/// Smith form over the DVR O. Pivots on an entry of minimal valuation,
/// ties broken by smallest row, then smallest column.
SmithDecomposition smith_normal_form(const MatrixLocal& a);

/// Rank of a skew matrix at s. Throws NotSkew, and OddSkewRank if the
/// computed rank is odd (which would indicate an arithmetic fault).
std::size_t skew_rank(const MatrixLocal& a, const FieldElem& s);

/// Pfaffian by recursive expansion along the first row.
LocalScalar pfaffian(const MatrixLocal& a);

/// Inverse over O; NotUnitDeterminant unless det(A) is a unit.
MatrixLocal invert_unit(const MatrixLocal& a);

// ---- linear algebra over the residue field

struct RowEchelon {
    MatrixField reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
RowEchelon rref(MatrixField a);
/// Columns form a basis of the right kernel, one per free column, in column order.
MatrixField kernel_basis(const MatrixField& a);
/// Some X with A X = B; Internal if the system is inconsistent.
MatrixField solve(const MatrixField& a, const MatrixField& b);
/// NotUnitDeterminant if singular.
MatrixField inverse(const MatrixField& a);
/// Horizontal concatenation [A | B].
MatrixField hconcat(const MatrixField& a, const MatrixField& b);

}  // namespace semieuler
