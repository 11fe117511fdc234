#include "semieuler/specialization.hpp"

#include <utility>

namespace semieuler {

void validate_special(const SpecialComplex& s)
{
    if (s.lower_ranks.size() != s.m + 1 || s.alphas.size() != s.m)
        throw Error(ErrorCode::ShapeMismatch, "special complex needs m+1 lower ranks and m lower differentials");
    if (s.beta.rows() != s.lower_ranks[s.m] || s.beta.cols() != s.lower_ranks[s.m])
        throw Error(ErrorCode::ShapeMismatch, "beta has shape " + s.beta.shape());
    if (!is_skew(s.beta))
        throw Error(ErrorCode::NotSkew, "middle differential is not alternating");
    validate(full_complex(s));
}

FreeComplex full_complex(const SpecialComplex& s)
{
    const std::size_t n = s.n();
    std::vector<std::size_t> ranks(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        ranks[p] = p <= s.m ? s.lower_ranks[p] : s.lower_ranks[n - p];
    std::vector<MatrixLocal> diffs;
    for (std::size_t p = 0; p < n; ++p) {
        if (p < s.m)
            diffs.push_back(s.alphas[p]);
        else if (p == s.m)
            diffs.push_back(s.beta);
        else
            diffs.push_back(s.alphas[n - p - 1].transpose().signed_by((p + 1) % 2 == 0 ? 1 : -1));
    }
    return FreeComplex(s.ring, std::move(ranks), std::move(diffs));
}

Pairing canonical_pairing(const SpecialComplex& s)
{
    const FreeComplex full = full_complex(s);
    const int low_sign = s.m % 2 == 0 ? 1 : -1;
    std::vector<MatrixLocal> comps;
    for (std::size_t p = 0; p <= s.n(); ++p)
        comps.push_back(identity_matrix(full.rank(static_cast<long>(p)), s.ring).signed_by(p <= s.m ? low_sign : 1));
    Pairing out = Pairing::make(full, std::move(comps));
    out.symmetry_verified = true;
    return out;
}

Specialization specialize_self_dual(const FreeComplex& c, const Pairing& p)
{
    if (!(p.host.ranks() == c.ranks()) || p.n != c.length())
        throw Error(ErrorCode::ShapeMismatch, "pairing does not live on this complex");
    check_chain(p);
    check_symmetry(p);
    perfection_at_point(p, c.ring()->base_point());

    const std::size_t m = p.m;
    SpecialComplex special{c.ring(), m, {}, {}, p.components[m + 1] * c.diff(static_cast<long>(m))};
    for (std::size_t i = 0; i <= m; ++i)
        special.lower_ranks.push_back(c.rank(static_cast<long>(i)));
    for (std::size_t i = 0; i < m; ++i)
        special.alphas.push_back(c.diff(static_cast<long>(i)));
    if (!is_skew(special.beta))
        throw Error(ErrorCode::SkewnessViolation, "R_{m+1} d^m is not alternating");

    const FreeComplex full = full_complex(special);
    ChainMap iso{c, full, {}};
    for (std::size_t q = 0; q <= p.n; ++q)
        iso.components.push_back(q <= m ? identity_matrix(c.rank(static_cast<long>(q)), c.ring()) : p.components[q]);
    try {
        validate(full);
        validate_chain_map(iso);
    } catch (const Error& e) {
        throw Error(ErrorCode::SkewnessViolation, std::string("rewritten complex is inconsistent: ") + e.what());
    }
    return Specialization{std::move(special), std::move(iso)};
}

std::size_t psi_via_formula(const SpecialComplex& s, const FieldElem& point)
{
    std::size_t even_ranks = 0;
    for (std::size_t i = 0; i <= s.n(); i += 2)
        even_ranks += i <= s.m ? s.lower_ranks[i] : s.lower_ranks[s.n() - i];
    std::size_t drop = rank_at(s.beta, point);
    for (std::size_t i = 0; i < s.m; ++i) {
        const MatrixField a = evaluate(s.alphas[i], point);
        drop += rank(a) + rank(a.transpose());
    }
    return even_ranks - drop;
}

unsigned expected_parity(const SpecialComplex& s)
{
    std::size_t even_ranks = 0;
    for (std::size_t i = 0; i <= s.n(); i += 2)
        even_ranks += i <= s.m ? s.lower_ranks[i] : s.lower_ranks[s.n() - i];
    return static_cast<unsigned>(even_ranks % 2);
}

bool PipelineReport::parity_constant() const
{
    for (const auto& r : samples)
        if (r.parity != samples.front().parity || r.psi_special != r.psi_formula ||
            (r.psi_formula && *r.psi_formula % 2 != expected_parity))
            return false;
    return true;
}

namespace {

/// The input and full(S) have isomorphic fibers at `s` when every witness
/// map is defined there and the degreewise isomorphism stays invertible.
bool witnesses_defined_at(const PipelineResult& r, const std::vector<MatrixLocal>& iso_inverse,
                          const FieldElem& s)
{
    try {
        const auto touch = [&](const std::vector<MatrixLocal>& ms) {
            for (const auto& m : ms)
                (void)evaluate(m, s);
        };
        touch(r.normalization.to_original.components);
        touch(r.normalization.from_original.components);
        touch(r.normalization.homotopy);
        touch(r.normalization.minimal.diffs());
        touch(r.specialization.iso.components);
        touch(iso_inverse);
        touch(full_complex(r.specialization.special).diffs());
        for (const auto& m : r.specialization.iso.components)
            if (rank_at(m, s) != m.rows())
                return false;
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::PoleAtPoint)
            return false;
        throw;
    }
}

}  // namespace

PipelineResult special_form_pipeline(const FreeComplex& k, const Pairing& p0, const std::vector<FieldElem>& samples,
                                 const PipelineOptions& options)
{
    validate(k);
    if (!(p0.host.ranks() == k.ranks()) || p0.n != k.length())
        throw Error(ErrorCode::ShapeMismatch, "pairing does not live on the input complex");
    check_chain(p0);
    const FieldElem s0 = k.ring()->base_point();

    Pairing sym = symmetrize(p0);
    check_perfection_on_cohomology(sym, s0);
    NormalizationResult norm = normalize_at_point(k);
    Pairing q = transport(sym, norm.to_original);
    try {
        perfection_at_point(q, s0);
    } catch (const Error& e) {
        throw Error(ErrorCode::Internal, std::string("transported pairing lost perfection: ") + e.what());
    }
    Specialization spec = specialize_self_dual(norm.minimal, q);
    ChainMap to_special = compose(spec.iso, norm.from_original);

    PipelineReport report;
    report.n = p0.n;
    report.m = p0.m;
    report.input_ranks = k.ranks();
    report.minimal_ranks = norm.minimal.ranks();
    report.split_count = norm.split_count;
    report.beta_exponents = smith_normal_form(spec.special.beta).exponents;
    report.beta_skew = is_skew(spec.special.beta);
    report.expected_parity = expected_parity(spec.special);

    PipelineResult result{std::move(sym), std::move(norm), std::move(q), std::move(spec), std::move(to_special),
                          {}};
    if (options.verify_quasi_iso)
        report.quasi_iso_verified = is_quasi_iso(result.to_special);

    std::vector<MatrixLocal> iso_inverse;
    for (const auto& m : result.specialization.iso.components)
        iso_inverse.push_back(invert_unit(m));

    const FreeComplex full = full_complex(result.specialization.special);
    std::vector<FieldElem> points{s0};
    points.insert(points.end(), samples.begin(), samples.end());
    for (const auto& s : points) {
        SampleRecord rec;
        rec.point = s;
        const auto dims_input = fiber_cohomology(k, s);
        rec.psi_input = semi_euler(k, s);
        try {
            rec.psi_formula = psi_via_formula(result.specialization.special, s);
            rec.psi_special = semi_euler(full, s);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PoleAtPoint)
                throw;
            rec.psi_formula.reset();
            rec.psi_special.reset();
        }
        rec.parity = static_cast<unsigned>(rec.psi_input % 2);
        rec.in_neighborhood = witnesses_defined_at(result, iso_inverse, s);
        if (rec.in_neighborhood)
            rec.dims_agree = dims_input == fiber_cohomology(full, s);
        report.samples.push_back(std::move(rec));
    }
    result.report = std::move(report);
    return result;
}

}  // namespace semieuler
