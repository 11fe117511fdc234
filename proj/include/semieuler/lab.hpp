#pragma once

// Seeded test-data factory: random special complexes with their canonical
// pairings, quasi-isomorphic scramblers, sample points and fiber scans.

#include <cstdint>
#include <random>
#include <vector>

#include "semieuler/specialization.hpp"

namespace semieuler {

/// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// Polynomial with coefficients in [-3, 3] and degree <= degree_bound.
Poly random_poly(BaseField field, unsigned degree_bound, Rng& rng);

/// A product of up to max_ops elementary operations over k[t] (row additions
/// with polynomial multipliers, swaps, scalings by nonzero constants), with its
/// inverse. Both have polynomial entries and constant determinant.
struct Unimodular {
    MatrixLocal matrix;
    MatrixLocal inverse;
};
Unimodular random_unimodular(std::size_t n, const RingPtr& ring, unsigned max_ops, unsigned degree_bound, Rng& rng);

struct GenParams {
    std::size_t n = 1;  // odd
    std::size_t min_rank = 0;
    std::size_t max_rank = 2;
    unsigned degree_bound = 2;
    BaseField field = BaseField::rationals();
    long base_point = 0;
    std::uint64_t seed = 0;
    /// Ask for a nonzero beta; InfeasibleRanks when r_m < 2.
    bool require_nonzero_middle = false;
};

/// Random special complex: lower differentials and beta have entries of
/// valuation >= 1, so the induced complex is already minimal at s0.
SpecialComplex gen_special_complex(const GenParams& params);

struct GeneratedInstance {
    SpecialComplex special;
    FreeComplex complex;  // full_complex(special)
    Pairing pairing;      // canonical_pairing(special)
};

/// CharTwo in characteristic 2 (use gen_special_complex there).
GeneratedInstance gen_special(const GenParams& params);

struct ScrambleOptions {
    unsigned max_summands = 3;
    unsigned max_ops = 10;
    unsigned degree_bound = 2;
};

struct Scrambled {
    FreeComplex complex;
    Pairing pairing;
    ChainMap witness;  // original -> scrambled, a quasi-isomorphism
    ChainMap back;     // scrambled -> original, pairing pulled back along it
};

/// Insert 0..max_summands contractible pieces (0 -> O -c-> O -> 0 at random
/// adjacent degrees), then change basis in every degree by random unimodular
/// matrices. The pairing is transported along `back`.
Scrambled scramble(const FreeComplex& c, const Pairing& p, std::uint64_t seed, const ScrambleOptions& options = {});

/// `count` seeded points where every entry of every given complex is
/// defined. Draws with replacement; over F_p they repeat.
std::vector<FieldElem> sample_points(const std::vector<FreeComplex>& complexes, std::size_t count,
                                     std::uint64_t seed);

struct FiberRow {
    FieldElem point;
    std::vector<std::size_t> dims;
    std::size_t psi = 0;
    unsigned parity = 0;
    std::vector<bool> jumps;  // dims[i] > generic dims[i]
};

struct FiberReport {
    std::size_t length = 0;
    std::vector<std::size_t> generic_dims;
    std::vector<FiberRow> rows;

    bool parity_constant() const;
    bool any_jump() const;
};

FiberReport fiber_scan(const FreeComplex& c, const std::vector<FieldElem>& points);

}  // namespace semieuler
