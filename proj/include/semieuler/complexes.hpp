#pragma once

// Finite free cochain complexes 0 -> C^0 -> ... -> C^n -> 0 over the local
// ring O, chain maps between them, and their homology over O and on fibers.

#include <cstddef>
#include <vector>

#include "semieuler/linalg.hpp"

namespace semieuler {

class FreeComplex {
public:
    /// `ranks` has n+1 entries, `diffs` has n entries with diffs[i] of shape
    /// ranks[i+1] x ranks[i]. Shapes are checked here; d^2 = 0 is checked by
    /// validate().
    FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<MatrixLocal> diffs);

    /// All terms zero, degrees 0..length.
    static FreeComplex zero(const RingPtr& ring, std::size_t length);
    /// 0 -> O^r -> 0 in degree 0.
    static FreeComplex point(const RingPtr& ring, std::size_t r = 1);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return ranks_.size() - 1; }
    /// Rank of the degree-i term; 0 outside 0..length.
    std::size_t rank(long i) const;
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    /// d^i : C^i -> C^{i+1}; a zero matrix of the right shape outside 0..length-1.
    MatrixLocal diff(long i) const;
    const std::vector<MatrixLocal>& diffs() const noexcept { return diffs_; }

    /// Same complex padded with zero terms up to the given length.
    FreeComplex padded(std::size_t length) const;

    bool operator==(const FreeComplex& rhs) const;

private:
    RingPtr ring_;
    std::vector<std::size_t> ranks_;
    std::vector<MatrixLocal> diffs_;
};

/// Throws NotAComplex (degree i) when d^{i+1} d^i != 0.
void validate(const FreeComplex& c);

/// Degree-preserving chain map; components[i] : source^i -> target^i.
struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<MatrixLocal> components;

    /// Component in degree i; zero outside the stored range.
    MatrixLocal at(long i) const;
};

ChainMap identity_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& source, const FreeComplex& target);
/// g o f
ChainMap compose(const ChainMap& g, const ChainMap& f);
/// Throws NotAChainMap (degree i) when f^{i+1} d^i != d^i f^i, ShapeMismatch on bad shapes.
void validate_chain_map(const ChainMap& f);
bool is_chain_map(const ChainMap& f);

/// Degree p term is dual(C^{n-p}); the differential p -> p+1 is
/// (-1)^{p+1} transpose(d^{n-p-1}). LengthExceedsTwist if length(C) > n.
FreeComplex dual_twist(const FreeComplex& c, std::size_t n);

/// Position of the basis vector a (x) b inside tensor(A, B) in degree i + j.
/// Degree q is ordered in blocks of ascending i, each block row-major
/// (index a * rank_B(j) + b).
class TensorLayout {
public:
    TensorLayout(const FreeComplex& a, const FreeComplex& b);

    std::size_t length() const noexcept { return length_; }
    std::size_t rank(std::size_t q) const;
    /// Offset of block (i, q - i) inside degree q.
    std::size_t block_offset(std::size_t q, std::size_t i) const;
    std::size_t index(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;

private:
    std::vector<std::size_t> ra_;
    std::vector<std::size_t> rb_;
    std::size_t length_;
    std::vector<std::vector<std::size_t>> offsets_;  // offsets_[q][i]
    std::vector<std::size_t> ranks_;
};

/// d(a (x) b) = da (x) b + (-1)^i a (x) db for a in A^i.
FreeComplex tensor(const FreeComplex& a, const FreeComplex& b);

/// tau(a (x) b) = (-1)^{deg a * deg b} b (x) a on tensor(A, A).
ChainMap tau(const FreeComplex& a);

/// Mapping cone of f : X -> Y, stored one degree up so that all terms sit in
/// degrees >= 0: stored term k is X^k (+) Y^{k-1} (X part first) and the
/// differential is [[-dX, 0], [f, dY]]. Stored degree k is cone degree k - 1.
FreeComplex mapping_cone(const ChainMap& f);
inline constexpr long kConeShift = 1;

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
/// Inclusion of the first summand A -> A (+) B.
ChainMap sum_inclusion_first(const FreeComplex& a, const FreeComplex& b);
/// Projection A (+) B -> A.
ChainMap sum_projection_first(const FreeComplex& a, const FreeComplex& b);

/// H^i = O^free_rank (+) sum over e in torsion of O/pi^e.
struct HomologyDegree {
    std::size_t free_rank = 0;
    std::vector<std::size_t> torsion;  // ascending, all >= 1

    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyDegree&) const = default;
};
using HomologyProfile = std::vector<HomologyDegree>;

/// Homology over O from Smith forms of the differentials.
HomologyProfile homology(const FreeComplex& c);
bool is_acyclic(const FreeComplex& c);

/// dim_k H^i(C|_s) for i = 0..length.
std::vector<std::size_t> fiber_cohomology(const FreeComplex& c, const FieldElem& s);
/// Sum of fiber cohomology dimensions over even degrees.
std::size_t semi_euler(const FreeComplex& c, const FieldElem& s);
/// Generic fiber dimensions (ranks over k(t)).
std::vector<std::size_t> generic_cohomology(const FreeComplex& c);

/// True iff the mapping cone of f is acyclic over O.
bool is_quasi_iso(const ChainMap& f);

/// Cocycle representatives of a basis of H^i(C|_s): columns of the returned
/// matrices. Kernel vectors are taken in kernel_basis order, keeping those
/// independent modulo the image of d^{i-1}(s).
std::vector<MatrixField> cohomology_basis(const FreeComplex& c, const FieldElem& s);

/// Matrices of H(f|_s) in the bases returned by cohomology_basis.
std::vector<MatrixField> induced_on_cohomology(const ChainMap& f, const FieldElem& s);

}  // namespace semieuler
