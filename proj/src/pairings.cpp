#include "semieuler/pairings.hpp"

#include <utility>

namespace semieuler {

namespace {

int parity_sign(std::size_t e)
{
    return e % 2 == 0 ? 1 : -1;
}

void check_shapes(const Pairing& p)
{
    if (p.components.size() != p.n + 1)
        throw Error(ErrorCode::ShapeMismatch,
                    "expected " + std::to_string(p.n + 1) + " components, got " + std::to_string(p.components.size()));
    for (std::size_t q = 0; q <= p.n; ++q) {
        const auto& r = p.components[q];
        if (r.rows() != p.host.rank(static_cast<long>(p.n - q)) || r.cols() != p.host.rank(static_cast<long>(q)))
            throw Error(ErrorCode::ShapeMismatch, "component R_" + std::to_string(q) + " has shape " + r.shape(),
                        static_cast<long>(q));
    }
}

}  // namespace

Pairing Pairing::make(FreeComplex host, std::vector<MatrixLocal> components)
{
    const std::size_t n = host.length();
    if (n % 2 == 0)
        throw Error(ErrorCode::EvenTwist, "pairings need an odd twist n = 2m+1, got " + std::to_string(n));
    Pairing p{std::move(host), n, (n - 1) / 2, std::move(components), false};
    check_shapes(p);
    return p;
}

Pairing Pairing::zero(const FreeComplex& host)
{
    std::vector<MatrixLocal> comps;
    const std::size_t n = host.length();
    for (std::size_t q = 0; q <= n; ++q)
        comps.push_back(zero_matrix(host.rank(static_cast<long>(n - q)), host.rank(static_cast<long>(q)), host.ring()));
    return make(host, std::move(comps));
}

ChainMap adjoint_map(const Pairing& p)
{
    check_shapes(p);
    return ChainMap{p.host, dual_twist(p.host, p.n), p.components};
}

void check_chain(const Pairing& p)
{
    check_shapes(p);
    const FreeComplex& l = p.host;
    for (std::size_t q = 0; q < p.n; ++q) {
        const long qq = static_cast<long>(q);
        const MatrixLocal lhs = p.components[q + 1] * l.diff(qq);
        const MatrixLocal rhs =
            (l.diff(static_cast<long>(p.n) - qq - 1).transpose() * p.components[q]).signed_by(parity_sign(q + 1));
        if (!(lhs == rhs))
            throw Error(ErrorCode::NotChainCompatible, "R_{p+1} d^p != (-1)^{p+1} d^T R_p", qq);
    }
}

void check_symmetry(const Pairing& p)
{
    check_shapes(p);
    for (std::size_t q = 0; q <= p.n; ++q) {
        const int sign = parity_sign(q * (p.n - q) + p.m);
        if (!(p.components[q] == p.components[p.n - q].transpose().signed_by(sign)))
            throw Error(ErrorCode::NotSymmetric, "R_p != (-1)^{p(n-p)+m} R_{n-p}^T", static_cast<long>(q));
    }
}

MatrixLocal tensor_functional(const Pairing& p)
{
    check_shapes(p);
    const TensorLayout layout(p.host, p.host);
    MatrixLocal f = zero_matrix(1, layout.rank(p.n), p.host.ring());
    for (std::size_t q = 0; q <= p.n; ++q) {
        const auto& r = p.components[q];
        for (std::size_t a = 0; a < r.cols(); ++a)
            for (std::size_t b = 0; b < r.rows(); ++b)
                f(0, layout.index(q, a, p.n - q, b)) = r(b, a);
    }
    return f;
}

bool symmetric_via_tensor(const Pairing& p)
{
    const MatrixLocal f = tensor_functional(p);
    const ChainMap t = tau(p.host);
    return f * t.at(static_cast<long>(p.n)) == f.signed_by(p.symmetry_sign());
}

bool chain_via_tensor(const Pairing& p)
{
    const MatrixLocal f = tensor_functional(p);
    const FreeComplex t = tensor(p.host, p.host);
    return (f * t.diff(static_cast<long>(p.n) - 1)).is_zero();
}

Pairing symmetrize(const Pairing& p)
{
    const RingPtr& ring = p.host.ring();
    if (!ring->field().two_is_unit())
        throw Error(ErrorCode::CharTwo, "symmetrization divides by 2, which is not a unit");
    check_shapes(p);
    const LocalScalar half(ring, Poly(FieldElem(ring->field(), mpq_class(1, 2))));
    Pairing out = p;
    for (std::size_t q = 0; q <= p.n; ++q) {
        const int sign = parity_sign(q * (p.n - q) + p.m);
        out.components[q] = (p.components[q] + p.components[p.n - q].transpose().signed_by(sign)).scaled(half);
    }
    out.symmetry_verified = true;
    return out;
}

void perfection_at_point(const Pairing& p, const FieldElem& s)
{
    check_shapes(p);
    for (std::size_t q = 0; q <= p.n; ++q) {
        const auto& r = p.components[q];
        if (!r.is_square())
            throw Error(ErrorCode::NotPerfect, "R_p is " + r.shape(), static_cast<long>(q));
        if (rank_at(r, s) != r.rows())
            throw Error(ErrorCode::NotPerfect, "R_p(s) is singular at t=" + s.to_string(), static_cast<long>(q));
    }
}

CohomologyPairing cohomology_pairing(const Pairing& p, const FieldElem& s)
{
    check_shapes(p);
    const auto z = cohomology_basis(p.host, s);
    CohomologyPairing out;
    for (std::size_t i = 0; i <= p.n; ++i)
        out.u.push_back(z[p.n - i].transpose() * evaluate(p.components[i], s) * z[i]);
    return out;
}

void check_perfection_on_cohomology(const Pairing& p, const FieldElem& s)
{
    const CohomologyPairing cp = cohomology_pairing(p, s);
    for (std::size_t i = 0; i < cp.u.size(); ++i) {
        const auto& u = cp.u[i];
        if (!u.is_square() || rank(u) != u.rows())
            throw Error(ErrorCode::NotPerfectOnCohomology,
                        "induced pairing " + u.shape() + " is degenerate at t=" + s.to_string(), static_cast<long>(i));
    }
}

Pairing transport(const Pairing& p, const ChainMap& h)
{
    check_shapes(p);
    if (!(h.target.ranks() == p.host.ranks()) || h.source.length() > p.n)
        throw Error(ErrorCode::ShapeMismatch, "transport map does not land in the pairing's host");
    const FreeComplex source = h.source.padded(p.n);
    std::vector<MatrixLocal> comps;
    for (std::size_t q = 0; q <= p.n; ++q) {
        const MatrixLocal hq = h.at(static_cast<long>(q));
        const MatrixLocal hdual = h.at(static_cast<long>(p.n - q));
        if (hq.rows() != p.host.rank(static_cast<long>(q)) || hq.cols() != source.rank(static_cast<long>(q)))
            throw Error(ErrorCode::ShapeMismatch, "transport component has shape " + hq.shape(), static_cast<long>(q));
        comps.push_back(hdual.transpose() * p.components[q] * hq);
    }
    Pairing out = Pairing::make(source, std::move(comps));
    out.symmetry_verified = p.symmetry_verified;
    return out;
}

}  // namespace semieuler
