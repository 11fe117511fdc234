#include "semieuler/lab.hpp"

#include <algorithm>
#include <utility>

namespace semieuler {

long Rng::uniform(long lo, long hi)
{
    if (hi <= lo)
        return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Poly random_poly(BaseField field, unsigned degree_bound, Rng& rng)
{
    const long deg = rng.uniform(0, degree_bound);
    std::vector<FieldElem> coeffs;
    for (long k = 0; k <= deg; ++k)
        coeffs.emplace_back(field, rng.uniform(-3, 3));
    return Poly(field, std::move(coeffs));
}

namespace {

FieldElem random_nonzero_constant(BaseField field, Rng& rng)
{
    while (true) {
        FieldElem c(field, rng.uniform(-3, 3));
        if (!c.is_zero())
            return c;
    }
}

/// pi * (random polynomial of degree <= bound - 1): valuation >= 1.
LocalScalar random_in_maximal_ideal(const RingPtr& ring, unsigned degree_bound, Rng& rng)
{
    const unsigned inner = degree_bound > 0 ? degree_bound - 1 : 0;
    return LocalScalar::uniformizer(ring) * LocalScalar(ring, random_poly(ring->field(), inner, rng));
}

}  // namespace

Unimodular random_unimodular(std::size_t n, const RingPtr& ring, unsigned max_ops, unsigned degree_bound, Rng& rng)
{
    Unimodular u{identity_matrix(n, ring), identity_matrix(n, ring)};
    if (n == 0)
        return u;
    const long ops = rng.uniform(0, max_ops);
    for (long k = 0; k < ops; ++k) {
        const long kind = n >= 2 ? rng.uniform(0, 2) : 2;
        if (kind == 0) {
            const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
            if (b >= a)
                ++b;
            const LocalScalar c(ring, random_poly(ring->field(), degree_bound, rng));
            u.matrix.add_row_multiple(a, b, c);
            u.inverse.add_col_multiple(b, a, -c);
        } else if (kind == 1) {
            const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            u.matrix.swap_rows(a, b);
            u.inverse.swap_cols(a, b);
        } else {
            const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            const FieldElem c = random_nonzero_constant(ring->field(), rng);
            u.matrix.scale_row(a, LocalScalar(ring, Poly(c)));
            u.inverse.scale_col(a, LocalScalar(ring, Poly(c.inverse())));
        }
    }
    return u;
}

SpecialComplex gen_special_complex(const GenParams& params)
{
    if (params.n % 2 == 0)
        throw Error(ErrorCode::EvenTwist, "generator needs odd n");
    if (params.min_rank > params.max_rank)
        throw Error(ErrorCode::InfeasibleRanks, "min_rank exceeds max_rank");
    const RingPtr ring = LocalRing::make(params.field, params.base_point);
    const std::size_t m = (params.n - 1) / 2;
    Rng rng(params.seed);

    std::vector<std::size_t> ranks(m + 1);
    for (auto& r : ranks)
        r = static_cast<std::size_t>(
            rng.uniform(static_cast<long>(params.min_rank), static_cast<long>(params.max_rank)));
    if (params.require_nonzero_middle && ranks[m] < 2)
        throw Error(ErrorCode::InfeasibleRanks,
                    "a nonzero alternating middle map needs rank >= 2, got " + std::to_string(ranks[m]));

    // K^i = X_i (+) Y_i: alpha^i maps Y_i into X_{i+1} and kills X_i; beta
    // lives on Y_m. X_i comes first in the basis.
    std::vector<std::size_t> x(m + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t y_prev = ranks[i - 1] - x[i - 1];
        std::size_t cap = std::min(y_prev, ranks[i]);
        if (i == m && params.require_nonzero_middle)
            cap = std::min(cap, ranks[m] - 2);
        x[i] = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cap)));
    }

    std::vector<Unimodular> g;
    for (std::size_t i = 0; i <= m; ++i)
        g.push_back(random_unimodular(ranks[i], ring, 10, params.degree_bound, rng));

    SpecialComplex s{ring, m, ranks, {}, zero_matrix(ranks[m], ranks[m], ring)};
    for (std::size_t i = 0; i < m; ++i) {
        MatrixLocal a = zero_matrix(ranks[i + 1], ranks[i], ring);
        const std::size_t y = ranks[i] - x[i];
        for (std::size_t r = 0; r < x[i + 1]; ++r)
            for (std::size_t c = 0; c < y; ++c)
                a(r, x[i] + c) = random_in_maximal_ideal(ring, params.degree_bound, rng);
        s.alphas.push_back(g[i + 1].matrix * a * g[i].inverse);
    }

    const std::size_t ym = ranks[m] - x[m];
    MatrixLocal b = zero_matrix(ranks[m], ranks[m], ring);
    bool nonzero = false;
    do {
        for (std::size_t r = 0; r < ym; ++r)
            for (std::size_t c = r + 1; c < ym; ++c) {
                const LocalScalar v = random_in_maximal_ideal(ring, params.degree_bound, rng);
                b(x[m] + r, x[m] + c) = v;
                b(x[m] + c, x[m] + r) = -v;
                nonzero = nonzero || !v.is_zero();
            }
    } while (params.require_nonzero_middle && !nonzero);
    s.beta = g[m].inverse.transpose() * b * g[m].inverse;

    validate_special(s);
    return s;
}

GeneratedInstance gen_special(const GenParams& params)
{
    if (!params.field.two_is_unit())
        throw Error(ErrorCode::CharTwo, "symmetric pairings need 2 to be a unit");
    SpecialComplex s = gen_special_complex(params);
    FreeComplex c = full_complex(s);
    Pairing p = canonical_pairing(s);
    return GeneratedInstance{std::move(s), std::move(c), std::move(p)};
}

Scrambled scramble(const FreeComplex& c, const Pairing& p, std::uint64_t seed, const ScrambleOptions& options)
{
    const RingPtr& ring = c.ring();
    Rng rng(seed);
    FreeComplex cur = c;
    ChainMap witness = identity_map(c);
    ChainMap back = identity_map(c);

    const long summands = c.length() >= 1 ? rng.uniform(0, options.max_summands) : 0;
    for (long k = 0; k < summands; ++k) {
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c.length()) - 1));
        std::vector<std::size_t> ranks(c.length() + 1, 0);
        ranks[j] = ranks[j + 1] = 1;
        std::vector<MatrixLocal> diffs;
        for (std::size_t i = 0; i < c.length(); ++i) {
            MatrixLocal d = zero_matrix(ranks[i + 1], ranks[i], ring);
            if (i == j)
                d(0, 0) = LocalScalar(ring, Poly(random_nonzero_constant(ring->field(), rng)));
            diffs.push_back(std::move(d));
        }
        const FreeComplex piece(ring, ranks, std::move(diffs));
        witness = compose(sum_inclusion_first(cur, piece), witness);
        back = compose(back, sum_projection_first(cur, piece));
        cur = direct_sum(cur, piece);
    }

    std::vector<Unimodular> g;
    for (std::size_t i = 0; i <= cur.length(); ++i)
        g.push_back(random_unimodular(cur.rank(static_cast<long>(i)), ring, options.max_ops, options.degree_bound, rng));
    std::vector<MatrixLocal> diffs;
    for (std::size_t i = 0; i < cur.length(); ++i)
        diffs.push_back(g[i + 1].matrix * cur.diff(static_cast<long>(i)) * g[i].inverse);
    const FreeComplex out(ring, cur.ranks(), std::move(diffs));

    ChainMap forward{cur, out, {}};
    ChainMap backward{out, cur, {}};
    for (const auto& u : g) {
        forward.components.push_back(u.matrix);
        backward.components.push_back(u.inverse);
    }
    witness = compose(forward, witness);
    back = compose(back, backward);

    Pairing q = transport(p, back);
    return Scrambled{out, std::move(q), std::move(witness), std::move(back)};
}

namespace {

bool defined_everywhere_at(const std::vector<FreeComplex>& complexes, const FieldElem& s)
{
    for (const auto& c : complexes)
        for (const auto& d : c.diffs())
            for (std::size_t i = 0; i < d.rows(); ++i)
                for (std::size_t j = 0; j < d.cols(); ++j)
                    if (d(i, j).den().eval(s).is_zero())
                        return false;
    return true;
}

}  // namespace

std::vector<FieldElem> sample_points(const std::vector<FreeComplex>& complexes, std::size_t count,
                                     std::uint64_t seed)
{
    std::vector<FieldElem> out;
    if (complexes.empty())
        return out;
    const BaseField field = complexes.front().ring()->field();
    Rng rng(seed);
    const std::size_t max_attempts = 200 * (count + 1);
    for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
        FieldElem s;
        if (field.is_rationals()) {
            const long num = rng.uniform(-40, 40);
            const long den = rng.uniform(1, 3);
            s = FieldElem(field, mpq_class(num, den));
        } else {
            s = FieldElem(field, rng.uniform(0, static_cast<long>(field.characteristic()) - 1));
        }
        if (defined_everywhere_at(complexes, s))
            out.push_back(s);
    }
    return out;
}

bool FiberReport::parity_constant() const
{
    return std::all_of(rows.begin(), rows.end(), [&](const FiberRow& r) { return r.parity == rows.front().parity; });
}

bool FiberReport::any_jump() const
{
    for (const auto& r : rows)
        for (bool j : r.jumps)
            if (j)
                return true;
    return false;
}

FiberReport fiber_scan(const FreeComplex& c, const std::vector<FieldElem>& points)
{
    FiberReport report;
    report.length = c.length();
    report.generic_dims = generic_cohomology(c);
    for (const auto& s : points) {
        FiberRow row;
        row.point = s;
        row.dims = fiber_cohomology(c, s);
        for (std::size_t i = 0; i < row.dims.size(); i += 2)
            row.psi += row.dims[i];
        row.parity = static_cast<unsigned>(row.psi % 2);
        for (std::size_t i = 0; i < row.dims.size(); ++i)
            row.jumps.push_back(row.dims[i] > report.generic_dims[i]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace semieuler
