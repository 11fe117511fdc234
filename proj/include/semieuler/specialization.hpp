#pragma once

// Minimal complexes at the base point, the rewrite of a self-dual complex
// into special form (skew-symmetric middle differential), the rank formula
// for the semi-Euler characteristic, and the full assembly pipeline.

#include <cstddef>
#include <optional>
#include <vector>

#include "semieuler/pairings.hpp"

namespace semieuler {

/// K^0 -> ... -> K^m -beta-> dual(K^m) -> ... -> dual(K^0), n = 2m + 1.
struct SpecialComplex {
    RingPtr ring;
    std::size_t m = 0;
    std::vector<std::size_t> lower_ranks;  // r_0..r_m
    std::vector<MatrixLocal> alphas;       // alpha^0..alpha^{m-1}
    MatrixLocal beta;                      // r_m x r_m, alternating

    std::size_t n() const noexcept { return 2 * m + 1; }
};

/// Shapes, is_skew(beta) (NotSkew), and d^2 = 0 of the induced full complex.
void validate_special(const SpecialComplex& s);

/// The induced complex: lower half, beta, then (-1)^{p+1} alpha^{n-p-1}^T
/// in degree p > m.
FreeComplex full_complex(const SpecialComplex& s);

/// Canonical (-1)^m-symmetric pairing on full_complex(s): R_p = (-1)^m I for
/// p <= m and R_p = I for p > m.
Pairing canonical_pairing(const SpecialComplex& s);

struct NormalizationResult {
    FreeComplex minimal;
    ChainMap to_original;    // minimal -> original
    ChainMap from_original;  // original -> minimal
    /// homotopy[i] : original^i -> original^{i-1} with
    /// to o from - id = d h + h d (homotopy[0] is 0 x r_0... empty map).
    std::vector<MatrixLocal> homotopy;
    /// Contractible pairs O -> O split off from d^i, per degree i.
    std::vector<std::size_t> split_count;
};

/// Split off unit entries until every differential vanishes at s0. Pivot:
/// lowest degree first, then the first unit entry in row-major order.
NormalizationResult normalize_at_point(const FreeComplex& c);

/// Checks every postcondition of a normalization against its input: chain
/// maps, d(s0) = 0, from o to = id and the homotopy identity. Throws Internal.
void verify_normalization(const FreeComplex& original, const NormalizationResult& r);

struct Specialization {
    SpecialComplex special;
    ChainMap iso;  // c -> full_complex(special), degreewise isomorphism
};

/// Requires check_chain, check_symmetry and perfection_at_point(p, s0).
/// Keeps degrees <= m, sets beta = R_{m+1} d^m and maps degree p > m by R_p.
/// SkewnessViolation if beta comes out non-alternating.
Specialization specialize_self_dual(const FreeComplex& c, const Pairing& p);

/// sum_{i even} rank K^i - rank beta(s) - sum_{i<m} (rank alpha^i(s) + rank alpha^i(s)^T)
std::size_t psi_via_formula(const SpecialComplex& s, const FieldElem& point);

/// sum over even degrees of the full complex's ranks, mod 2.
unsigned expected_parity(const SpecialComplex& s);

struct SampleRecord {
    FieldElem point;
    std::size_t psi_input = 0;    // semi_euler of the input complex
    /// Both unset where the special complex has a pole (it is only defined
    /// near s0, with denominators the input may not have).
    std::optional<std::size_t> psi_formula;  // psi_via_formula on the special complex
    std::optional<std::size_t> psi_special;  // semi_euler of full_complex
    unsigned parity = 0;          // psi_input mod 2
    /// The witness maps input <-> full(S) are all defined and invertible at
    /// this point, so the fiber cohomologies must coincide there.
    bool in_neighborhood = false;
    bool dims_agree = true;
};

struct PipelineReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> input_ranks;
    std::vector<std::size_t> minimal_ranks;
    std::vector<std::size_t> split_count;
    std::vector<std::size_t> beta_exponents;  // Smith exponents of beta
    bool beta_skew = false;
    std::optional<bool> quasi_iso_verified;  // input -> full(S), cone acyclic over O
    unsigned expected_parity = 0;
    std::vector<SampleRecord> samples;

    bool parity_constant() const;
};

struct PipelineOptions {
    bool verify_quasi_iso = true;
};

struct PipelineResult {
    Pairing symmetrized;
    NormalizationResult normalization;
    Pairing transported;
    Specialization specialization;
    ChainMap to_special;  // input -> full(S)
    PipelineReport report;
};

/// symmetrize -> perfection on cohomology at s0 -> normalize -> transport ->
/// perfection at s0 -> specialize_self_dual, then evaluate the samples.
PipelineResult special_form_pipeline(const FreeComplex& k, const Pairing& p0, const std::vector<FieldElem>& samples,
                                 const PipelineOptions& options = {});

}  // namespace semieuler
