#ifndef QX_PFAFFIAN_HPP
#define QX_PFAFFIAN_HPP

#include "qx/matrix_algebra.hpp"

#include <functional>

namespace qx {

using EMat = std::vector<std::vector<Element>>;

/// Pfaffian of the principal submatrix A_I by the 2-shuffle expansion, over an
/// arbitrary entry ring E. `I` must be strictly increasing ("[i1,...,i2r]"
/// brackets reject unsorted input); `barred` replaces -q by -q^{-1} in the
/// structure constants. `one` is returned for the empty index set.
template <class E>
E pf_shuffle_generic(const std::vector<std::vector<E>>& A, const IndexSet& I,
                     VarSetPtr vars, bool barred, const E& one) {
    const int m = static_cast<int>(I.size());
    if (m % 2 != 0) throw NcError("pfaffian: index set of odd size");
    for (int k = 1; k < m; ++k)
        if (I[k] <= I[k - 1]) throw NcError("pfaffian: unsorted index set");
    if (m == 0) return one;
    E out{};
    std::vector<int> seq;
    std::vector<bool> used(m, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == m) {
            int inv = inversions(seq);
            Scalar c = sc_neg_q(vars, barred ? -inv : inv);
            E prod = A[I[seq[0]] - 1][I[seq[1]] - 1];
            for (int k = 2; k < m; k += 2)
                prod = prod * A[I[seq[k]] - 1][I[seq[k + 1]] - 1];
            out = out + prod * c;
            return;
        }
        int lo = 0;
        while (used[lo]) ++lo;
        used[lo] = true;
        seq.push_back(lo);
        for (int j = lo + 1; j < m; ++j) {
            if (used[j]) continue;
            used[j] = true;
            seq.push_back(j);
            rec();
            seq.pop_back();
            used[j] = false;
        }
        seq.pop_back();
        used[lo] = false;
    };
    rec();
    return out;
}

/// Shuffle-expansion Pfaffian of A_I (production path, denominator-free).
Element pf_shuffle(const EMat& A, const IndexSet& I, VarSetPtr vars,
                   const Element& one);
/// First-row Laplace expansion of the same bracket.
Element pf_laplace(const EMat& A, const IndexSet& I, VarSetPtr vars,
                   const Element& one);
/// Full-symmetric-group definition with the exact scalar division
/// 1 / ((1+q^2)^r [r]_{q^4}!); throws NcError if the division is not exact.
Element pf_definition(const EMat& A, const IndexSet& I, VarSetPtr vars,
                      const Element& one);

/// Pf_q(X) of the generator matrix (symplectic presentations).
Element pfaffian(const Presentation* p);
Element pf_bracket(const Presentation* p, const IndexSet& I);

/// The Pluecker-type condition for all i<j<k<l in [1,N].
bool plucker_check(const EMat& A, int N, VarSetPtr vars);
bool plucker_check(const Presentation* p);

/// Cofactors and the comatrix X*.
Element pf_cofactor(const Presentation* p, int i, int j);
EMat pf_comatrix(const Presentation* p);
bool pf_orthogonality(const Presentation* p);

/// Coefficient of y_1...y_{2n} in Omega^n over the combined presentation,
/// mapped back into the plain symplectic presentation.
Element omega_power_coeff(int N, VarSetPtr vars);
bool omega_power_check(int N, VarSetPtr vars);

/// Shared central denominator Pf_q(X) for a symplectic presentation (cached).
std::shared_ptr<const CentralTag> pf_tag(const Presentation* p);

}  // namespace qx

#endif
