#pragma once

// Shared fixtures and independent oracles for the test binaries. The oracles
// deliberately avoid the library's elimination routines.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "semieuler/document.hpp"

namespace testing {

using namespace semieuler;

inline RingPtr ring_q(long s0 = 0) { return LocalRing::make(BaseField::rationals(), s0); }
inline RingPtr ring_p(std::uint64_t p, long s0 = 0) { return LocalRing::make(BaseField::prime(p), s0); }

inline LocalScalar sc(const RingPtr& ring, const std::string& text) { return parse_scalar(ring, text); }
inline FieldElem fe(const RingPtr& ring, long v) { return ring->elem(v); }

inline MatrixLocal mat(const RingPtr& ring, std::initializer_list<std::initializer_list<const char*>> rows,
                       std::size_t cols = 0)
{
    if (rows.size() > 0)
        cols = rows.begin()->size();
    MatrixLocal out = zero_matrix(rows.size(), cols, ring);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* e : row)
            out(r, c++) = parse_scalar(ring, e);
        ++r;
    }
    return out;
}

inline FreeComplex f_id(const RingPtr& ring) { return FreeComplex(ring, {1, 1}, {mat(ring, {{"1"}})}); }
inline FreeComplex f_ce(const RingPtr& ring) { return FreeComplex(ring, {1, 1}, {mat(ring, {{"t"}})}); }
inline FreeComplex f_sp1(const RingPtr& ring)
{
    return FreeComplex(ring, {2, 2}, {mat(ring, {{"0", "t"}, {"-t", "0"}})});
}
inline Pairing taut_sp1(const RingPtr& ring)
{
    return Pairing::make(f_sp1(ring), {identity_matrix(2, ring), identity_matrix(2, ring)});
}

// --- oracles ---------------------------------------------------------------

/// Rank by counting: dimension of the row space over F_p via enumeration of
/// all linear combinations (tiny matrices only).
inline std::size_t rank_by_enumeration(const MatrixField& a)
{
    const std::uint64_t p = a.zero().field().characteristic();
    const std::size_t rows = a.rows();
    std::vector<std::vector<std::uint64_t>> span;
    std::vector<std::uint64_t> coeff(rows, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < rows; ++i)
        total *= p;
    std::vector<std::vector<std::uint64_t>> seen;
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t x = k;
        for (std::size_t i = 0; i < rows; ++i) {
            coeff[i] = x % p;
            x /= p;
        }
        std::vector<std::uint64_t> v(a.cols(), 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                v[j] = (v[j] + coeff[i] * a(i, j).residue()) % p;
        seen.push_back(std::move(v));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::size_t r = 0, size = 1;
    while (size < seen.size()) {
        size *= p;
        ++r;
    }
    return r;
}

/// Rank over Q by plain Gaussian elimination on mpq values.
inline std::size_t rank_naive(const MatrixField& a)
{
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j).value();
    const bool modp = !a.zero().field().is_rationals();
    if (modp)
        return rank_by_enumeration(a);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && m[piv][c] == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < a.cols(); ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Fiber cohomology by rank-nullity with the naive rank oracle.
inline std::vector<std::size_t> fiber_dims_oracle(const FreeComplex& c, const FieldElem& s)
{
    std::vector<std::size_t> out;
    for (long i = 0; i <= static_cast<long>(c.length()); ++i) {
        const std::size_t rin = i >= 1 ? rank_naive(evaluate(c.diff(i - 1), s)) : 0;
        const std::size_t rout = i < static_cast<long>(c.length()) ? rank_naive(evaluate(c.diff(i), s)) : 0;
        out.push_back(c.rank(i) - rout - rin);
    }
    return out;
}

/// Leibniz expansion of the determinant.
template <typename T>
T determinant_leibniz(const semieuler::Matrix<T>& a)
{
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = a.zero();
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        T term = a.zero().one_like();
        for (std::size_t i = 0; i < n; ++i)
            term = term * a(i, perm[i]);
        total = sign > 0 ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Valuations of the Smith invariants from determinantal divisors: the k-th
/// exponent is v(D_k) - v(D_{k-1}), D_k = gcd of all k x k minors.
inline std::vector<std::size_t> smith_exponents_oracle(const MatrixLocal& a)
{
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::size_t best = kInfiniteValuation;
        std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
        std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
            do {
                MatrixLocal minor = zero_matrix(k, k, a.zero().ring());
                std::size_t ri = 0;
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    if (!rsel[r])
                        continue;
                    std::size_t ci = 0;
                    for (std::size_t c = 0; c < a.cols(); ++c)
                        if (csel[c])
                            minor(ri, ci++) = a(r, c);
                    ++ri;
                }
                best = std::min(best, determinant_leibniz(minor).valuation());
            } while (std::next_permutation(csel.begin(), csel.end()));
        } while (std::next_permutation(rsel.begin(), rsel.end()));
        if (best == kInfiniteValuation)
            break;
        out.push_back(best - prev);
        prev = best;
    }
    return out;
}

/// Random alternating matrix with polynomial entries.
inline MatrixLocal random_skew(const RingPtr& ring, std::size_t n, Rng& rng, unsigned degree = 2)
{
    MatrixLocal a = zero_matrix(n, n, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const LocalScalar v(ring, random_poly(ring->field(), degree, rng));
            a(i, j) = v;
            a(j, i) = -v;
        }
    return a;
}

inline MatrixLocal random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, Rng& rng,
                                 unsigned degree = 2)
{
    MatrixLocal a = zero_matrix(rows, cols, ring);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = LocalScalar(ring, random_poly(ring->field(), degree, rng));
    return a;
}

/// Random complex (not self-dual): d^i = B_i A_i with A_i B_{i-1} = 0 built
/// from a chain of random maps through a split shape; entries are polynomial.
inline FreeComplex random_complex(const RingPtr& ring, std::size_t length, std::size_t max_rank, Rng& rng)
{
    std::vector<std::size_t> ranks(length + 1);
    for (auto& r : ranks)
        r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_rank)));
    // Each term splits as X_i (+) Y_i; d^i sends Y_i into X_{i+1} only.
    std::vector<std::size_t> x(length + 1, 0);
    for (std::size_t i = 1; i <= length; ++i)
        x[i] = static_cast<std::size_t>(
            rng.uniform(0, static_cast<long>(std::min(ranks[i], ranks[i - 1] - x[i - 1]))));
    std::vector<Unimodular> g;
    for (std::size_t i = 0; i <= length; ++i)
        g.push_back(random_unimodular(ranks[i], ring, 6, 1, rng));
    std::vector<MatrixLocal> diffs;
    for (std::size_t i = 0; i < length; ++i) {
        MatrixLocal d = zero_matrix(ranks[i + 1], ranks[i], ring);
        for (std::size_t r = 0; r < x[i + 1]; ++r)
            for (std::size_t c = x[i]; c < ranks[i]; ++c)
                d(r, c) = LocalScalar(ring, random_poly(ring->field(), 2, rng));
        diffs.push_back(g[i + 1].matrix * d * g[i].inverse);
    }
    return FreeComplex(ring, ranks, std::move(diffs));
}

}  // namespace testing
