#include "semieuler/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace semieuler {

MatrixLocal zero_matrix(std::size_t rows, std::size_t cols, const RingPtr& ring)
{
    return MatrixLocal(rows, cols, LocalScalar::zero(ring));
}

MatrixLocal identity_matrix(std::size_t n, const RingPtr& ring)
{
    return MatrixLocal::identity(n, LocalScalar::zero(ring));
}

MatrixField field_zero_matrix(std::size_t rows, std::size_t cols, BaseField field)
{
    return MatrixField(rows, cols, FieldElem::zero(field));
}

MatrixField evaluate(const MatrixLocal& a, const FieldElem& s)
{
    return a.map([&](const LocalScalar& x) { return x.eval_at(s); }, FieldElem::zero(s.field()));
}

MatrixField reduce(const MatrixLocal& a)
{
    return evaluate(a, a.zero().ring()->base_point());
}

std::size_t rank(const MatrixField& a)
{
    MatrixField work = a;
    return bareiss_eliminate(work);
}

std::size_t rank_at(const MatrixLocal& a, const FieldElem& s)
{
    return rank(evaluate(a, s));
}

MatrixPoly clear_denominators(const MatrixLocal& a, std::vector<Poly>* multipliers)
{
    const BaseField field = a.zero().ring()->field();
    MatrixPoly out(a.rows(), a.cols(), Poly(field));
    if (multipliers)
        multipliers->clear();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Poly l = Poly::constant(field, 1);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Poly& d = a(i, j).den();
            if (!d.is_one())
                l = l * (d / gcd(l, d));
        }
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).num() * (l / a(i, j).den());
        if (multipliers)
            multipliers->push_back(l);
    }
    return out;
}

std::size_t rank_generic(const MatrixLocal& a)
{
    MatrixPoly p = clear_denominators(a);
    return bareiss_eliminate(p);
}

LocalScalar determinant(const MatrixLocal& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "determinant of " + a.shape());
    const RingPtr& ring = a.zero().ring();
    std::vector<Poly> mult;
    const Poly det = bareiss_determinant(clear_denominators(a, &mult));
    Poly scale = Poly::constant(ring->field(), 1);
    for (const auto& m : mult)
        scale *= m;
    return LocalScalar(ring, det, scale);
}

FieldElem determinant(const MatrixField& a)
{
    return bareiss_determinant(a);
}

MatrixLocal SmithDecomposition::diagonal(std::size_t rows, std::size_t cols) const
{
    const RingPtr& ring = u.zero().ring();
    MatrixLocal d = zero_matrix(rows, cols, ring);
    const LocalScalar pi = LocalScalar::uniformizer(ring);
    for (std::size_t k = 0; k < exponents.size(); ++k)
        d(k, k) = pi.pow(static_cast<unsigned>(exponents[k]));
    return d;
}

SmithDecomposition smith_normal_form(const MatrixLocal& input)
{
    const RingPtr& ring = input.zero().ring();
    MatrixLocal a = input;
    SmithDecomposition out{identity_matrix(a.rows(), ring), identity_matrix(a.cols(), ring), {}};
    const LocalScalar pi = LocalScalar::uniformizer(ring);
    const std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t best = kInfiniteValuation, bi = 0, bj = 0;
        for (std::size_t i = k; i < a.rows(); ++i)
            for (std::size_t j = k; j < a.cols(); ++j) {
                if (a(i, j).is_zero())
                    continue;
                const std::size_t v = a(i, j).valuation();
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == kInfiniteValuation)
            break;

        a.swap_rows(k, bi);
        out.u.swap_rows(k, bi);
        a.swap_cols(k, bj);
        out.v.swap_cols(k, bj);

        const LocalScalar pivot = a(k, k);
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
            if (a(i, k).is_zero())
                continue;
            const LocalScalar f = -quotient(a(i, k), pivot);
            a.add_row_multiple(i, k, f);
            out.u.add_row_multiple(i, k, f);
        }
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
            if (a(k, j).is_zero())
                continue;
            const LocalScalar f = -quotient(a(k, j), pivot);
            a.add_col_multiple(j, k, f);
            out.v.add_col_multiple(j, k, f);
        }
        // pivot = unit * pi^best; rescale the row so the pivot is exactly pi^best
        const LocalScalar target = pi.pow(static_cast<unsigned>(best));
        const LocalScalar unit_inv = quotient(target, pivot);
        a.scale_row(k, unit_inv);
        out.u.scale_row(k, unit_inv);
        out.exponents.push_back(best);
    }
    return out;
}

std::size_t skew_rank(const MatrixLocal& a, const FieldElem& s)
{
    if (!is_skew(a))
        throw Error(ErrorCode::NotSkew, "matrix is not alternating");
    const std::size_t r = rank_at(a, s);
    if (r % 2 != 0)
        throw Error(ErrorCode::OddSkewRank, "alternating matrix with odd rank " + std::to_string(r));
    return r;
}

namespace {

LocalScalar pfaffian_rec(const MatrixLocal& a, std::vector<std::size_t>& idx)
{
    if (idx.empty())
        return a.zero().one_like();
    const std::size_t first = idx.front();
    LocalScalar acc = a.zero();
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const LocalScalar& entry = a(first, idx[k]);
        if (entry.is_zero())
            continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != k)
                rest.push_back(idx[q]);
        const LocalScalar term = entry * pfaffian_rec(a, rest);
        acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

LocalScalar pfaffian(const MatrixLocal& a)
{
    if (!is_skew(a))
        throw Error(ErrorCode::NotSkew, "pfaffian of a non-alternating matrix");
    if (a.rows() % 2 != 0)
        throw Error(ErrorCode::OddDimension, "pfaffian of odd dimension " + std::to_string(a.rows()));
    std::vector<std::size_t> idx(a.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return pfaffian_rec(a, idx);
}

MatrixLocal invert_unit(const MatrixLocal& input)
{
    if (!input.is_square())
        throw Error(ErrorCode::NonSquare, "inverse of " + input.shape());
    const RingPtr& ring = input.zero().ring();
    const std::size_t n = input.rows();
    MatrixLocal a = input;
    MatrixLocal inv = identity_matrix(n, ring);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a(piv, c).is_unit())
            ++piv;
        if (piv == n)
            throw Error(ErrorCode::NotUnitDeterminant, "determinant vanishes at the base point");
        a.swap_rows(c, piv);
        inv.swap_rows(c, piv);
        const LocalScalar s = a(c, c).inverse();
        a.scale_row(c, s);
        inv.scale_row(c, s);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero())
                continue;
            const LocalScalar f = -a(i, c);
            a.add_row_multiple(i, c, f);
            inv.add_row_multiple(i, c, f);
        }
    }
    return inv;
}

// ---- residue field

RowEchelon rref(MatrixField a)
{
    RowEchelon out{a, {}};
    MatrixField& m = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        m.scale_row(r, m(r, c).inverse());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && !m(i, c).is_zero())
                m.add_row_multiple(i, r, -m(i, c));
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

MatrixField kernel_basis(const MatrixField& a)
{
    const RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    const std::size_t nfree = a.cols() - e.pivots.size();
    MatrixField basis(a.cols(), nfree, a.zero());
    std::size_t k = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        basis(f, k) = a.zero().one_like();
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], k) = -e.reduced(r, f);
        ++k;
    }
    return basis;
}

MatrixField hconcat(const MatrixField& a, const MatrixField& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorCode::ShapeMismatch, "hconcat " + a.shape() + " and " + b.shape());
    MatrixField out(a.rows(), a.cols() + b.cols(), a.zero());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

MatrixField solve(const MatrixField& a, const MatrixField& b)
{
    const RowEchelon e = rref(hconcat(a, b));
    MatrixField x(a.cols(), b.cols(), a.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= a.cols())
            throw Error(ErrorCode::Internal, "inconsistent linear system");
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

MatrixField inverse(const MatrixField& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "inverse of " + a.shape());
    const std::size_t n = a.rows();
    const RowEchelon e = rref(hconcat(a, MatrixField::identity(n, a.zero())));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
        throw Error(ErrorCode::NotUnitDeterminant, "singular matrix");
    return e.reduced.block(0, n, n, n);
}

}  // namespace semieuler
