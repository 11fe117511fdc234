#include <utility>

#include "semieuler/specialization.hpp"

namespace semieuler {

namespace {

struct Pivot {
    std::size_t degree;
    std::size_t row;
    std::size_t col;
};

std::optional<Pivot> find_unit_pivot(const std::vector<MatrixLocal>& diffs)
{
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        const MatrixLocal& d = diffs[i];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (d(r, c).is_unit())
                    return Pivot{i, r, c};
    }
    return std::nullopt;
}

}  // namespace

NormalizationResult normalize_at_point(const FreeComplex& c)
{
    const RingPtr& ring = c.ring();
    const std::size_t len = c.length();
    std::vector<std::size_t> ranks = c.ranks();
    std::vector<MatrixLocal> diffs = c.diffs();

    // to: current -> original, from: original -> current, homotopy on original
    std::vector<MatrixLocal> to, from, htpy;
    for (std::size_t k = 0; k <= len; ++k) {
        to.push_back(identity_matrix(ranks[k], ring));
        from.push_back(identity_matrix(ranks[k], ring));
        htpy.push_back(zero_matrix(k == 0 ? 0 : ranks[k - 1], ranks[k], ring));
    }
    std::vector<std::size_t> splits(len, 0);

    while (auto piv = find_unit_pivot(diffs)) {
        const std::size_t i = piv->degree, r = piv->row, col = piv->col;
        const MatrixLocal d = diffs[i];
        const LocalScalar uinv = d(r, col).inverse();

        const MatrixLocal x = d.block(r, 0, 1, d.cols()).without(npos, col);
        const MatrixLocal y = d.block(0, col, d.rows(), 1).without(r, npos);
        diffs[i] = d.without(r, col) - (y * x).scaled(uinv);
        if (i >= 1)
            diffs[i - 1] = diffs[i - 1].without(col, npos);
        if (i + 1 < len)
            diffs[i + 1] = diffs[i + 1].without(npos, r);

        MatrixLocal incl_i = identity_matrix(ranks[i], ring).without(npos, col);
        incl_i.set_block(col, 0, x.scaled(-uinv));
        const MatrixLocal incl_next = identity_matrix(ranks[i + 1], ring).without(npos, r);
        const MatrixLocal proj_i = identity_matrix(ranks[i], ring).without(col, npos);
        MatrixLocal proj_next = identity_matrix(ranks[i + 1], ring).without(r, npos);
        proj_next.set_block(0, r, y.scaled(-uinv));
        MatrixLocal h = zero_matrix(ranks[i], ranks[i + 1], ring);
        h(col, r) = -uinv;

        htpy[i + 1] = htpy[i + 1] + to[i] * h * from[i + 1];
        to[i] = to[i] * incl_i;
        to[i + 1] = to[i + 1] * incl_next;
        from[i] = proj_i * from[i];
        from[i + 1] = proj_next * from[i + 1];

        --ranks[i];
        --ranks[i + 1];
        ++splits[i];
    }

    FreeComplex minimal(ring, ranks, std::move(diffs));
    return NormalizationResult{minimal, ChainMap{minimal, c, std::move(to)}, ChainMap{c, minimal, std::move(from)},
                               std::move(htpy), std::move(splits)};
}

void verify_normalization(const FreeComplex& original, const NormalizationResult& r)
{
    const auto fail = [](const std::string& what) { throw Error(ErrorCode::Internal, "normalization: " + what); };
    validate(r.minimal);
    try {
        validate_chain_map(r.to_original);
        validate_chain_map(r.from_original);
    } catch (const Error& e) {
        fail(e.what());
    }
    for (const auto& d : r.minimal.diffs())
        if (!reduce(d).is_zero())
            fail("a differential of the minimal complex is nonzero at the base point");
    const ChainMap back = compose(r.from_original, r.to_original);
    for (std::size_t k = 0; k <= r.minimal.length(); ++k)
        if (!(back.at(static_cast<long>(k)) == identity_matrix(r.minimal.rank(static_cast<long>(k)), original.ring())))
            fail("from o to is not the identity in degree " + std::to_string(k));
    const ChainMap round = compose(r.to_original, r.from_original);
    for (std::size_t kk = 0; kk <= original.length(); ++kk) {
        const long k = static_cast<long>(kk);
        const MatrixLocal lhs = round.at(k) - identity_matrix(original.rank(k), original.ring());
        MatrixLocal rhs = zero_matrix(original.rank(k), original.rank(k), original.ring());
        if (kk >= 1)
            rhs = rhs + original.diff(k - 1) * r.homotopy[kk];
        if (kk + 1 < r.homotopy.size())
            rhs = rhs + r.homotopy[kk + 1] * original.diff(k);
        if (!(lhs == rhs))
            fail("homotopy identity fails in degree " + std::to_string(kk));
    }
}

}  // namespace semieuler
