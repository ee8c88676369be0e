#ifndef QX_SKLYANIN_HPP
#define QX_SKLYANIN_HPP

#include "qx/pfaffian.hpp"

#include <algorithm>

namespace qx {

/// Generic coefficient-extraction engine for Sklyanin minors. Works over an
/// arbitrary entry ring E (Element, LocalElement); `barred` computes the
/// q^{-1} variant of every structure constant. One column vector is
/// propagated at a time; entries of operators applied later multiply existing
/// coefficients from the left.

template <class E>
using GVec = std::map<MultiIdx, E>;

template <class E>
void g_apply_x(const std::vector<std::vector<E>>& X, int pos, GVec<E>& v) {
    const int dim = static_cast<int>(X.size());
    GVec<E> out;
    for (const auto& [K, coeff] : v)
        for (int i = 1; i <= dim; ++i) {
            const E& entry = X[i - 1][K[pos] - 1];
            MultiIdx K2 = K;
            K2[pos] = i;
            auto it = out.find(K2);
            if (it == out.end())
                out.emplace(K2, entry * coeff);
            else
                it->second = it->second + entry * coeff;
        }
    v = std::move(out);
}

template <class E>
void g_apply_rt(int a, int b, GVec<E>& v, VarSetPtr vars, bool barred) {
    Scalar q = sc_q(vars, barred ? -1 : 1);
    Scalar w = barred ? sc_q(vars, -1) - sc_q(vars) : sc_q_minus_qinv(vars);
    GVec<E> out;
    auto acc = [&](const MultiIdx& K, const E& val) {
        auto it = out.find(K);
        if (it == out.end())
            out.emplace(K, val);
        else
            it->second = it->second + val;
    };
    for (const auto& [K, coeff] : v) {
        if (K[a] != K[b]) {
            acc(K, coeff);
            continue;
        }
        acc(K, coeff * q);
        for (int l = 1; l < K[a]; ++l) {
            MultiIdx K2 = K;
            K2[a] = K2[b] = l;
            acc(K2, coeff * w);
        }
    }
    v = std::move(out);
}

/// Coefficient of row I in [m]_{q^2}! A_m applied to v; I may be any list of
/// distinct indices.
template <class E>
E g_project_row(const MultiIdx& I, const GVec<E>& v, VarSetPtr vars, bool barred,
                E acc) {
    int sg = inversions(I);
    MultiIdx c(I);
    std::sort(c.begin(), c.end());
    MultiIdx perm = c;
    do {
        auto it = v.find(perm);
        if (it == v.end()) continue;
        int e = sg + inversions(perm);
        acc = acc + it->second * sc_neg_q(vars, barred ? -e : e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// The minor X^I_J over a dim x dim matrix of entries; I, J are lists of
/// indices in [1, dim] of equal size (rows with repeats give zero).
template <class E>
E sklyanin_minor_generic(const std::vector<std::vector<E>>& X, const MultiIdx& I,
                         const MultiIdx& J, VarSetPtr vars, bool barred,
                         const E& one) {
    if (I.size() != J.size()) throw NcError("sklyanin_minor: size mismatch");
    const int m = static_cast<int>(I.size());
    E zero{};
    if (m == 0) return one;
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
            if (I[k] == I[l] || J[k] == J[l]) return zero;
    GVec<E> v{{J, one}};
    // <X_1 ... X_m> applied right to left
    g_apply_x(X, m - 1, v);
    for (int k = m - 1; k >= 1; --k) {
        for (int l = m; l > k; --l) g_apply_rt(k - 1, l - 1, v, vars, barred);
        g_apply_x(X, k - 1, v);
    }
    return g_project_row(I, v, vars, barred, zero);
}

/// Auxiliary minor over the same engine: row list I of size m, column list J
/// of size m-1 plus the extra column index c.
template <class E>
E aux_minor_generic(const std::vector<std::vector<E>>& X, const MultiIdx& I,
                    const MultiIdx& J, int c, VarSetPtr vars, bool barred,
                    const E& one) {
    const int m = static_cast<int>(I.size());
    if (static_cast<int>(J.size()) != m - 1)
        throw NcError("aux_minor: column list must have one entry fewer");
    MultiIdx col(J);
    col.push_back(c);
    GVec<E> v{{col, one}};
    for (int k = m - 1; k >= 1; --k) g_apply_rt(k - 1, m - 1, v, vars, barred);
    if (m >= 2) {
        g_apply_x(X, m - 2, v);
        for (int k = m - 2; k >= 1; --k) {
            for (int l = m - 1; l > k; --l) g_apply_rt(k - 1, l - 1, v, vars, barred);
            g_apply_x(X, k - 1, v);
        }
    }
    E zero{};
    return g_project_row(I, v, vars, barred, zero);
}

/// Determinant of a matrix treated as the generator matrix of its own size.
template <class E>
E sdet_of_matrix(const std::vector<std::vector<E>>& X, VarSetPtr vars, bool barred,
                 const E& one) {
    MultiIdx full(X.size());
    for (size_t i = 0; i < X.size(); ++i) full[i] = static_cast<int>(i) + 1;
    return sklyanin_minor_generic(X, full, full, vars, barred, one);
}

/// Comatrix over an arbitrary entry matrix: hat x_{ij} = (-q)^{i-dim}
/// (auxiliary minor with rows 1..dim, columns 1..i-hat..dim, extra column j).
template <class E>
std::vector<std::vector<E>> comatrix_of_matrix(const std::vector<std::vector<E>>& X,
                                               VarSetPtr vars, bool barred,
                                               const E& one) {
    const int dim = static_cast<int>(X.size());
    MultiIdx full(dim);
    for (int i = 0; i < dim; ++i) full[i] = i + 1;
    std::vector<std::vector<E>> out(dim, std::vector<E>(dim));
    for (int i = 1; i <= dim; ++i) {
        MultiIdx cols;
        for (int k = 1; k <= dim; ++k)
            if (k != i) cols.push_back(k);
        for (int j = 1; j <= dim; ++j)
            out[i - 1][j - 1] = aux_minor_generic(X, full, cols, j, vars, barred, one) *
                                sc_neg_q(vars, barred ? dim - i : i - dim);
    }
    return out;
}

// -- presentation-level API ---------------------------------------------------

Element sklyanin_minor(const Presentation* p, const MultiIdx& I, const MultiIdx& J);
Element aux_minor(const Presentation* p, const MultiIdx& I, const MultiIdx& J, int c);

/// Right-hand side of the auxiliary-minor expansion
/// s (-q)^{2 l(I)} sum_r (-q)^{r - s} x^t_{i_r j_1} X^{I'}_{J'} for the two
/// sign branches s = +1 / -1; which branch holds is pinned by tests.
Element aux_expansion_formula(const Presentation* p, const MultiIdx& I,
                              const MultiIdx& J, int sign);

/// sdet of the generator matrix; cached per presentation.
Element sdet(const Presentation* p);
Element sdet_explicit(const Presentation* p);

/// Image of a permutation of `ground` (sorted) under the inductive map; the
/// base case sends both two-element permutations to the identity.
std::vector<int> pi_map(const std::vector<int>& p, const std::vector<int>& ground);

EMat sklyanin_comatrix(const Presentation* p);

/// Central denominator for localization: sdet for case O, Pf for case Sp.
std::shared_ptr<const CentralTag> sdet_tag(const Presentation* p);
/// sdet^{-1} over that tag (for Sp, q^{-3n} Pf^{-2}).
LocalElement sdet_inverse(const Presentation* p);
LocalElement local_of(const Presentation* p, const Element& e);

/// Y = Q^{-1} X^{-1} Q as LocalElements over the central denominator.
std::vector<std::vector<LocalElement>> y_matrix(const Presentation* p);

/// omega(x_{ij}) = y_{N+1-i, N+1-j}, extended multiplicatively.
LocalElement omega_gen(const Presentation* p, int i, int j);
LocalElement omega_apply(const Presentation* p, const Element& e);

}  // namespace qx

#endif
