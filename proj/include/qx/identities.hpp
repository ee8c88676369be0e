#ifndef QX_IDENTITIES_HPP
#define QX_IDENTITIES_HPP

#include "qx/sklyanin.hpp"
#include "qx/tensorops.hpp"

namespace qx {

/// One multiplicative factor of an identity term: either the minor over the
/// index set I (sdet or Pf of the principal submatrix, per the descriptor
/// kind), or the inverse of that minor. An empty I on an inverse marker means
/// the full ground set.
struct IdFactor {
    bool inverse = false;
    IndexSet I;
};

struct IdTerm {
    Scalar coeff;
    std::vector<IdFactor> factors;
};

/// A minor identity sum_i coeff_i * f_{i1} ... f_{im_i} = 0.
struct IdentityDescriptor {
    enum class Kind { Sdet, Pf };
    Kind kind;
    std::vector<IdTerm> terms;
};

/// sdet (resp. Pf) of the principal submatrix X_I, computed by feeding the
/// submatrix through the generic machinery at its own dimension.
Element minor_value(IdentityDescriptor::Kind kind, const Presentation* p,
                    const IndexSet& I);

/// Clears inverse markers by multiplying every term on the left by the
/// maximal inverse power present (sound: the cleared minors are central, or
/// central within the subalgebra containing every remaining factor), then
/// checks that the sum normal-forms to zero.
bool evaluate_identity(const IdentityDescriptor& d, const Presentation* p);

/// sdet_{q^{-1}}(Y_{I^c}) = sdet_q(X_I) sdet_q(X)^{-1} (sdet kind), resp.
/// Pf_{q^{-1}}(Y_{I^c}) = Pf_q(X_I) Pf_q(X)^{-1} (pf kind, symplectic, |I|
/// even); compared cross-multiplied over the central denominator.
bool jacobi_check(IdentityDescriptor::Kind kind, const Presentation* p,
                  const IndexSet& I);

/// Bar-involutes every coefficient and replaces each factor over I by the
/// pair (full inverse, complement of I in [1, N]).
IdentityDescriptor cayley_transform(const IdentityDescriptor& d, int N);

/// Replaces each factor over I by the pair (inverse over X_J, I union J);
/// coefficients unchanged. J must be disjoint from every factor set, and of
/// even size for pf-kind descriptors.
IdentityDescriptor muir_law_transform(const IdentityDescriptor& d,
                                      const IndexSet& J);

/// Both alternating trace sums
///   sum_r (-1)^r tr_{1..k} S_r A'_{k-r} <X_1 ... X_k>  and
///   sum_r (-1)^r tr_{1..k} A_r S'_{k-r} <X_1 ... X_k>
/// vanish; the unprimed operator acts on copies 1..r, the primed one on
/// copies r+1..k, and S_0 = A_0 = id.
bool muir_trace_check(Case c, int N, int k);

/// Sylvester's theorem. sdet kind: the bordered minors
/// xt_ij = X^{{i} u J}_{{j} u J}, J = {N+1,...,N+M}, define a morphism of the
/// small algebra and sdet(Xt) = sdet(X_J)^{N-1} sdet(X); `literal_cols`
/// switches to the alternate index reading J = {M+1,...,M+N}. pf kind
/// (N = 2n, M = 2m): xt_ij = Pf(X_{{i,j} u J}) and
/// Pf(Xt) = Pf(X_J)^{n-1} Pf(X_{I u J}).
bool sylvester_check(IdentityDescriptor::Kind kind, Case c, int N, int M,
                     bool literal_cols = false);

/// The Grassmann-Pluecker relation for I = {1..n}, J = {n+1..n+m}, n, m odd:
///   sum_{j<=n} (-q)^{n-j} Pf(X_{I\j}) Pf(X_{{j} u J})
///     = sum_{j>n} (-q)^{e(j)} Pf(X_{I u j}) Pf(X_{J\j}),
/// with e(j) = j-n-1 (convention 0) or e(j) = j-n (convention 1).
bool grassmann_plucker_check(int n, int m, int convention);
/// Which convention holds (0 or 1); -1 if neither, 2 if both.
int grassmann_plucker_convention(int n, int m);

/// Quasideterminant factorization along the principal chain of sigma.
/// sdet kind: sdet = x_{s1 s1} |X_{s1 s2}|_{s2 s2} ... |X_{s1..sN}|_{sN sN}
/// with each factor the ratio sdet(X_{S_{k-1}})^{-1} sdet(X_{S_k}); verified
/// through the comatrix of each submatrix (diagonal entry = complementary
/// principal minor, full orthogonality), pairwise commutation of the cleared
/// factors, and the telescope endpoint. pf kind: Pf = (-q)^{theta_sigma}
/// x_{s1 s2} |X_{s1..s4}|_{s3 s4} ..., verified through the Pfaffian comatrix
/// of each submatrix plus the exponent telescope theta_sigma = sum_k e_k.
bool quasidet_factorization_check(IdentityDescriptor::Kind kind,
                                  const Presentation* p,
                                  const std::vector<int>& sigma);

/// Seed catalog of verified identities over the ground set [1, N] (trivial
/// differences and nested-minor commutators).
std::vector<IdentityDescriptor> seed_catalog(IdentityDescriptor::Kind kind,
                                             int N);

}  // namespace qx

#endif
