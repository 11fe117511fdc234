#include "semieuler/complexes.hpp"

#include <algorithm>
#include <utility>

namespace semieuler {

// ---------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<MatrixLocal> diffs)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(diffs))
{
    if (ranks_.empty())
        throw Error(ErrorCode::ShapeMismatch, "a complex needs at least one term");
    if (diffs_.size() != ranks_.size() - 1)
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(ranks_.size() - 1) + " differentials, got " +
                                                  std::to_string(diffs_.size()));
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != ranks_[i + 1] || diffs_[i].cols() != ranks_[i])
            throw Error(ErrorCode::ShapeMismatch,
                        "d^" + std::to_string(i) + " has shape " + diffs_[i].shape() + ", expected " +
                            std::to_string(ranks_[i + 1]) + "x" + std::to_string(ranks_[i]),
                        static_cast<long>(i));
        if (diffs_[i].zero().ring() != ring_ && !(*diffs_[i].zero().ring() == *ring_))
            throw Error(ErrorCode::FieldMismatch, "differential over another ring", static_cast<long>(i));
    }
}

FreeComplex FreeComplex::zero(const RingPtr& ring, std::size_t length)
{
    std::vector<MatrixLocal> diffs(length, zero_matrix(0, 0, ring));
    return FreeComplex(ring, std::vector<std::size_t>(length + 1, 0), std::move(diffs));
}

FreeComplex FreeComplex::point(const RingPtr& ring, std::size_t r)
{
    return FreeComplex(ring, {r}, {});
}

std::size_t FreeComplex::rank(long i) const
{
    if (i < 0 || i > static_cast<long>(length()))
        return 0;
    return ranks_[static_cast<std::size_t>(i)];
}

MatrixLocal FreeComplex::diff(long i) const
{
    if (i >= 0 && i < static_cast<long>(diffs_.size()))
        return diffs_[static_cast<std::size_t>(i)];
    return zero_matrix(rank(i + 1), rank(i), ring_);
}

FreeComplex FreeComplex::padded(std::size_t length) const
{
    if (length <= this->length())
        return *this;
    std::vector<std::size_t> ranks(length + 1, 0);
    std::vector<MatrixLocal> diffs;
    for (std::size_t i = 0; i <= length; ++i)
        ranks[i] = rank(static_cast<long>(i));
    for (std::size_t i = 0; i < length; ++i)
        diffs.push_back(diff(static_cast<long>(i)));
    return FreeComplex(ring_, std::move(ranks), std::move(diffs));
}

bool FreeComplex::operator==(const FreeComplex& rhs) const
{
    return *ring_ == *rhs.ring_ && ranks_ == rhs.ranks_ && diffs_ == rhs.diffs_;
}

void validate(const FreeComplex& c)
{
    for (std::size_t i = 0; i + 1 < c.diffs().size(); ++i)
        if (!(c.diffs()[i + 1] * c.diffs()[i]).is_zero())
            throw Error(ErrorCode::NotAComplex, "d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " != 0",
                        static_cast<long>(i));
}

// ---------------------------------------------------------------- chain maps

MatrixLocal ChainMap::at(long i) const
{
    if (i >= 0 && i < static_cast<long>(components.size()))
        return components[static_cast<std::size_t>(i)];
    return zero_matrix(target.rank(i), source.rank(i), source.ring());
}

ChainMap identity_map(const FreeComplex& c)
{
    ChainMap f{c, c, {}};
    for (std::size_t i = 0; i <= c.length(); ++i)
        f.components.push_back(identity_matrix(c.rank(static_cast<long>(i)), c.ring()));
    return f;
}

ChainMap zero_map(const FreeComplex& source, const FreeComplex& target)
{
    ChainMap f{source, target, {}};
    const std::size_t top = std::max(source.length(), target.length());
    for (std::size_t i = 0; i <= top; ++i)
        f.components.push_back(
            zero_matrix(target.rank(static_cast<long>(i)), source.rank(static_cast<long>(i)), source.ring()));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    ChainMap h{f.source, g.target, {}};
    const std::size_t top = std::max({f.source.length(), f.target.length(), g.target.length()});
    for (std::size_t i = 0; i <= top; ++i)
        h.components.push_back(g.at(static_cast<long>(i)) * f.at(static_cast<long>(i)));
    return h;
}

void validate_chain_map(const ChainMap& f)
{
    const long top = static_cast<long>(std::max(f.source.length(), f.target.length()));
    for (long i = 0; i <= top; ++i) {
        const MatrixLocal fi = f.at(i);
        if (fi.rows() != f.target.rank(i) || fi.cols() != f.source.rank(i))
            throw Error(ErrorCode::ShapeMismatch, "component has shape " + fi.shape(), i);
    }
    for (long i = 0; i < top; ++i) {
        const MatrixLocal lhs = f.at(i + 1) * f.source.diff(i);
        const MatrixLocal rhs = f.target.diff(i) * f.at(i);
        if (!(lhs == rhs))
            throw Error(ErrorCode::NotAChainMap, "f d != d f", i);
    }
}

bool is_chain_map(const ChainMap& f)
{
    try {
        validate_chain_map(f);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------- dual

FreeComplex dual_twist(const FreeComplex& c, std::size_t n)
{
    if (c.length() > n)
        throw Error(ErrorCode::LengthExceedsTwist,
                    "complex of length " + std::to_string(c.length()) + " twisted by " + std::to_string(n));
    std::vector<std::size_t> ranks(n + 1);
    std::vector<MatrixLocal> diffs;
    for (std::size_t p = 0; p <= n; ++p)
        ranks[p] = c.rank(static_cast<long>(n - p));
    for (std::size_t p = 0; p < n; ++p) {
        const long src = static_cast<long>(n) - static_cast<long>(p) - 1;
        diffs.push_back(c.diff(src).transpose().signed_by((p + 1) % 2 == 0 ? 1 : -1));
    }
    return FreeComplex(c.ring(), std::move(ranks), std::move(diffs));
}

// ---------------------------------------------------------------- tensor

TensorLayout::TensorLayout(const FreeComplex& a, const FreeComplex& b)
    : ra_(a.ranks()), rb_(b.ranks()), length_(a.length() + b.length())
{
    offsets_.assign(length_ + 1, std::vector<std::size_t>(ra_.size(), 0));
    ranks_.assign(length_ + 1, 0);
    for (std::size_t q = 0; q <= length_; ++q) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < ra_.size(); ++i) {
            if (i > q || q - i >= rb_.size())
                continue;
            offsets_[q][i] = off;
            off += ra_[i] * rb_[q - i];
        }
        ranks_[q] = off;
    }
}

std::size_t TensorLayout::rank(std::size_t q) const
{
    return q <= length_ ? ranks_[q] : 0;
}

std::size_t TensorLayout::block_offset(std::size_t q, std::size_t i) const
{
    return offsets_[q][i];
}

std::size_t TensorLayout::index(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const
{
    return offsets_[i + j][i] + a * rb_[j] + b;
}

FreeComplex tensor(const FreeComplex& a, const FreeComplex& b)
{
    const TensorLayout layout(a, b);
    const RingPtr& ring = a.ring();
    const std::size_t len = layout.length();
    std::vector<std::size_t> ranks(len + 1);
    for (std::size_t q = 0; q <= len; ++q)
        ranks[q] = layout.rank(q);
    std::vector<MatrixLocal> diffs;
    for (std::size_t q = 0; q < len; ++q) {
        MatrixLocal d = zero_matrix(ranks[q + 1], ranks[q], ring);
        for (std::size_t i = 0; i <= a.length(); ++i) {
            if (i > q || q - i > b.length())
                continue;
            const std::size_t j = q - i;
            const MatrixLocal da = a.diff(static_cast<long>(i));
            const MatrixLocal db = b.diff(static_cast<long>(j));
            const bool odd = i % 2 == 1;
            for (std::size_t x = 0; x < a.rank(static_cast<long>(i)); ++x)
                for (std::size_t y = 0; y < b.rank(static_cast<long>(j)); ++y) {
                    const std::size_t col = layout.index(i, x, j, y);
                    if (i + 1 <= a.length())
                        for (std::size_t x2 = 0; x2 < da.rows(); ++x2)
                            if (!da(x2, x).is_zero())
                                d(layout.index(i + 1, x2, j, y), col) += da(x2, x);
                    if (j + 1 <= b.length())
                        for (std::size_t y2 = 0; y2 < db.rows(); ++y2)
                            if (!db(y2, y).is_zero()) {
                                auto& slot = d(layout.index(i, x, j + 1, y2), col);
                                slot = odd ? slot - db(y2, y) : slot + db(y2, y);
                            }
                }
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

ChainMap tau(const FreeComplex& a)
{
    const FreeComplex t = tensor(a, a);
    const TensorLayout layout(a, a);
    const RingPtr& ring = a.ring();
    const LocalScalar one = LocalScalar::one(ring);
    ChainMap f{t, t, {}};
    for (std::size_t q = 0; q <= t.length(); ++q) {
        MatrixLocal m = zero_matrix(t.rank(static_cast<long>(q)), t.rank(static_cast<long>(q)), ring);
        for (std::size_t i = 0; i <= a.length(); ++i) {
            if (i > q || q - i > a.length())
                continue;
            const std::size_t j = q - i;
            const bool negative = (i * j) % 2 == 1;
            for (std::size_t x = 0; x < a.rank(static_cast<long>(i)); ++x)
                for (std::size_t y = 0; y < a.rank(static_cast<long>(j)); ++y)
                    m(layout.index(j, y, i, x), layout.index(i, x, j, y)) = negative ? -one : one;
        }
        f.components.push_back(std::move(m));
    }
    return f;
}

// ---------------------------------------------------------------- cone, sums

FreeComplex mapping_cone(const ChainMap& f)
{
    const FreeComplex& x = f.source;
    const FreeComplex& y = f.target;
    const RingPtr& ring = x.ring();
    const std::size_t len = std::max(x.length(), y.length() + 1);
    std::vector<std::size_t> ranks(len + 1);
    for (std::size_t k = 0; k <= len; ++k)
        ranks[k] = x.rank(static_cast<long>(k)) + y.rank(static_cast<long>(k) - 1);
    std::vector<MatrixLocal> diffs;
    for (std::size_t kk = 0; kk < len; ++kk) {
        const long k = static_cast<long>(kk);
        MatrixLocal d = zero_matrix(ranks[kk + 1], ranks[kk], ring);
        const std::size_t x_next = x.rank(k + 1);
        const std::size_t x_here = x.rank(k);
        d.set_block(0, 0, -x.diff(k));
        d.set_block(x_next, 0, f.at(k));
        d.set_block(x_next, x_here, y.diff(k - 1));
        diffs.push_back(std::move(d));
    }
    return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b)
{
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<std::size_t> ranks(len + 1);
    for (std::size_t i = 0; i <= len; ++i)
        ranks[i] = a.rank(static_cast<long>(i)) + b.rank(static_cast<long>(i));
    std::vector<MatrixLocal> diffs;
    for (std::size_t ii = 0; ii < len; ++ii) {
        const long i = static_cast<long>(ii);
        MatrixLocal d = zero_matrix(ranks[ii + 1], ranks[ii], a.ring());
        d.set_block(0, 0, a.diff(i));
        d.set_block(a.rank(i + 1), a.rank(i), b.diff(i));
        diffs.push_back(std::move(d));
    }
    return FreeComplex(a.ring(), std::move(ranks), std::move(diffs));
}

ChainMap sum_inclusion_first(const FreeComplex& a, const FreeComplex& b)
{
    const FreeComplex s = direct_sum(a, b);
    ChainMap f{a, s, {}};
    for (std::size_t i = 0; i <= s.length(); ++i) {
        MatrixLocal m = zero_matrix(s.rank(static_cast<long>(i)), a.rank(static_cast<long>(i)), a.ring());
        m.set_block(0, 0, identity_matrix(a.rank(static_cast<long>(i)), a.ring()));
        f.components.push_back(std::move(m));
    }
    return f;
}

ChainMap sum_projection_first(const FreeComplex& a, const FreeComplex& b)
{
    const FreeComplex s = direct_sum(a, b);
    ChainMap f{s, a, {}};
    for (std::size_t i = 0; i <= s.length(); ++i) {
        MatrixLocal m = zero_matrix(a.rank(static_cast<long>(i)), s.rank(static_cast<long>(i)), a.ring());
        m.set_block(0, 0, identity_matrix(a.rank(static_cast<long>(i)), a.ring()));
        f.components.push_back(std::move(m));
    }
    return f;
}

// ---------------------------------------------------------------- homology

HomologyProfile homology(const FreeComplex& c)
{
    std::vector<SmithDecomposition> snf;
    for (const auto& d : c.diffs())
        snf.push_back(smith_normal_form(d));
    HomologyProfile out(c.length() + 1);
    for (std::size_t i = 0; i <= c.length(); ++i) {
        const std::size_t out_rank = i < snf.size() ? snf[i].rank() : 0;
        const std::size_t in_rank = i > 0 ? snf[i - 1].rank() : 0;
        out[i].free_rank = c.rank(static_cast<long>(i)) - out_rank - in_rank;
        if (i > 0)
            for (auto e : snf[i - 1].exponents)
                if (e >= 1)
                    out[i].torsion.push_back(e);
    }
    return out;
}

bool is_acyclic(const FreeComplex& c)
{
    for (const auto& h : homology(c))
        if (!h.is_zero())
            return false;
    return true;
}

std::vector<std::size_t> fiber_cohomology(const FreeComplex& c, const FieldElem& s)
{
    std::vector<std::size_t> ranks;
    for (const auto& d : c.diffs())
        ranks.push_back(rank_at(d, s));
    std::vector<std::size_t> dims(c.length() + 1);
    for (std::size_t i = 0; i <= c.length(); ++i)
        dims[i] = c.rank(static_cast<long>(i)) - (i < ranks.size() ? ranks[i] : 0) - (i > 0 ? ranks[i - 1] : 0);
    return dims;
}

std::size_t semi_euler(const FreeComplex& c, const FieldElem& s)
{
    const auto dims = fiber_cohomology(c, s);
    std::size_t psi = 0;
    for (std::size_t i = 0; i < dims.size(); i += 2)
        psi += dims[i];
    return psi;
}

std::vector<std::size_t> generic_cohomology(const FreeComplex& c)
{
    std::vector<std::size_t> ranks;
    for (const auto& d : c.diffs())
        ranks.push_back(rank_generic(d));
    std::vector<std::size_t> dims(c.length() + 1);
    for (std::size_t i = 0; i <= c.length(); ++i)
        dims[i] = c.rank(static_cast<long>(i)) - (i < ranks.size() ? ranks[i] : 0) - (i > 0 ? ranks[i - 1] : 0);
    return dims;
}

bool is_quasi_iso(const ChainMap& f)
{
    return is_acyclic(mapping_cone(f));
}

std::vector<MatrixField> cohomology_basis(const FreeComplex& c, const FieldElem& s)
{
    std::vector<MatrixField> out;
    for (std::size_t ii = 0; ii <= c.length(); ++ii) {
        const long i = static_cast<long>(ii);
        const MatrixField kernel = kernel_basis(evaluate(c.diff(i), s));
        const MatrixField image = evaluate(c.diff(i - 1), s);
        const RowEchelon e = rref(hconcat(image, kernel));
        MatrixField z(c.rank(i), 0, FieldElem::zero(s.field()));
        std::vector<std::size_t> chosen;
        for (auto p : e.pivots)
            if (p >= image.cols())
                chosen.push_back(p - image.cols());
        MatrixField basis(c.rank(i), chosen.size(), FieldElem::zero(s.field()));
        for (std::size_t k = 0; k < chosen.size(); ++k)
            for (std::size_t r = 0; r < kernel.rows(); ++r)
                basis(r, k) = kernel(r, chosen[k]);
        out.push_back(std::move(basis));
    }
    return out;
}

std::vector<MatrixField> induced_on_cohomology(const ChainMap& f, const FieldElem& s)
{
    const auto zs = cohomology_basis(f.source, s);
    const auto zt = cohomology_basis(f.target, s);
    const std::size_t top = std::max(f.source.length(), f.target.length());
    std::vector<MatrixField> out;
    for (std::size_t ii = 0; ii <= top; ++ii) {
        const long i = static_cast<long>(ii);
        const BaseField field = s.field();
        const MatrixField src = ii < zs.size() ? zs[ii] : MatrixField(0, 0, FieldElem::zero(field));
        const MatrixField tgt =
            ii < zt.size() ? zt[ii] : MatrixField(f.target.rank(i), 0, FieldElem::zero(field));
        const MatrixField image = evaluate(f.target.diff(i - 1), s);
        const MatrixField rhs = evaluate(f.at(i), s) * src;
        const MatrixField x = solve(hconcat(image, tgt), rhs);
        out.push_back(x.block(image.cols(), 0, tgt.cols(), src.cols()));
    }
    return out;
}

}  // namespace semieuler
