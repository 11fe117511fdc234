#pragma once

// Pairings gamma : L (x) L -> O[-n], stored as the adjoint components
// R_p : L^p -> dual(L^{n-p}), one matrix of shape r_{n-p} x r_p per degree,
// so that gamma(a (x) b) = b^T R_p a for a in L^p, b in L^{n-p}.

#include <cstddef>
#include <vector>

#include "semieuler/complexes.hpp"

namespace semieuler {

struct Pairing {
    FreeComplex host;
    std::size_t n = 1;  // twist; equals host.length()
    std::size_t m = 0;  // n = 2m + 1
    std::vector<MatrixLocal> components;
    bool symmetry_verified = false;

    /// Checks n = host.length() = 2m + 1 (EvenTwist otherwise) and component
    /// shapes (ShapeMismatch).
    static Pairing make(FreeComplex host, std::vector<MatrixLocal> components);
    static Pairing zero(const FreeComplex& host);

    /// (-1)^m
    int symmetry_sign() const noexcept { return m % 2 == 0 ? 1 : -1; }
};

/// R as a map of complexes L -> dual_twist(L, n).
ChainMap adjoint_map(const Pairing& p);

/// R_{p+1} d^p = (-1)^{p+1} transpose(d^{n-p-1}) R_p for every p; throws
/// NotChainCompatible with the offending p.
void check_chain(const Pairing& p);

/// R_p = (-1)^{p(n-p)+m} transpose(R_{n-p}) for every p; throws NotSymmetric.
void check_symmetry(const Pairing& p);

/// gamma as a 1 x rank(T^n) row on the degree-n term of T = tensor(L, L).
MatrixLocal tensor_functional(const Pairing& p);
/// gamma o tau == (-1)^m gamma, checked on every basis vector of T^n.
bool symmetric_via_tensor(const Pairing& p);
/// gamma o d_T == 0 on T^{n-1}.
bool chain_via_tensor(const Pairing& p);

/// (gamma + (-1)^m gamma o tau) / 2. Throws CharTwo in characteristic 2.
Pairing symmetrize(const Pairing& p);

/// Every R_p(s) is square and invertible over k; throws NotPerfect(p).
void perfection_at_point(const Pairing& p, const FieldElem& s);

/// u_i : H^i(s) x H^{n-i}(s) -> k with u_i = Z_{n-i}^T R_i(s) Z_i in the
/// cocycle bases from cohomology_basis.
struct CohomologyPairing {
    std::vector<MatrixField> u;
};

CohomologyPairing cohomology_pairing(const Pairing& p, const FieldElem& s);
/// Throws NotPerfectOnCohomology(i) when some u_i is not square invertible.
void check_perfection_on_cohomology(const Pairing& p, const FieldElem& s);

/// Pull back along h : M -> L: gamma_M = gamma_L o (h (x) h), i.e.
/// R^M_p = transpose(h_{n-p}) R^L_p h_p.
Pairing transport(const Pairing& p, const ChainMap& h);

}  // namespace semieuler
