#include "qx/pfaffian.hpp"

#include <algorithm>
#include <mutex>

namespace qx {

Element pf_shuffle(const EMat& A, const IndexSet& I, VarSetPtr vars,
                   const Element& one) {
    return pf_shuffle_generic(A, I, vars, false, one);
}

Element pf_laplace(const EMat& A, const IndexSet& I, VarSetPtr vars,
                   const Element& one) {
    const int m = static_cast<int>(I.size());
    if (m % 2 != 0) throw NcError("pfaffian: index set of odd size");
    for (int k = 1; k < m; ++k)
        if (I[k] <= I[k - 1]) throw NcError("pfaffian: unsorted index set");
    if (m == 0) return one;
    if (m == 2) return A[I[0] - 1][I[1] - 1];
    Element out;
    for (int j = 2; j <= m; ++j) {
        IndexSet rest;
        for (int k = 1; k < m; ++k)
            if (k != j - 1) rest.push_back(I[k]);
        out += A[I[0] - 1][I[j - 1] - 1] * pf_laplace(A, rest, vars, one) *
               sc_neg_q(vars, j - 2);
    }
    return out;
}

Element pf_definition(const EMat& A, const IndexSet& I, VarSetPtr vars,
                      const Element& one) {
    const int m = static_cast<int>(I.size());
    if (m % 2 != 0) throw NcError("pfaffian: index set of odd size");
    if (m == 0) return one;
    const int r = m / 2;
    std::vector<int> perm(m);
    for (int k = 0; k < m; ++k) perm[k] = k;
    Element sum;
    do {
        Element prod = A[I[perm[0]] - 1][I[perm[1]] - 1];
        for (int k = 2; k < m; k += 2)
            prod = prod * A[I[perm[k]] - 1][I[perm[k + 1]] - 1];
        sum += prod * sc_neg_q(vars, inversions(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    Scalar q2 = sc_q(vars, 2);
    Scalar pref = (Scalar(vars, 1) + q2).pow(r) * q_factorial(r, sc_q(vars, 4));
    return sum.divide_exact(pref, true);
}

Element pfaffian(const Presentation* p) {
    if (!p->symplectic() || p->n() % 2 != 0)
        throw NcError("pfaffian: symplectic presentation of even size required");
    IndexSet full;
    for (int i = 1; i <= p->n(); ++i) full.push_back(i);
    return pf_bracket(p, full);
}

Element pf_bracket(const Presentation* p, const IndexSet& I) {
    return pf_shuffle(generator_matrix(p), I, p->vars(), p->one());
}

bool plucker_check(const EMat& A, int N, VarSetPtr vars) {
    auto a = [&](int i, int j) { return A[i - 1][j - 1]; };
    Scalar nq = sc_neg_q(vars);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k)
                for (int l = k + 1; l <= N; ++l) {
                    Element lhs = a(i, j) * a(k, l) + a(i, k) * a(j, l) * nq +
                                  a(i, l) * a(j, k) * nq.pow(2);
                    Element rhs = a(k, l) * a(i, j) + a(j, l) * a(i, k) * nq.pow(-1) +
                                  a(j, k) * a(i, l) * nq.pow(-2);
                    if (lhs != rhs) return false;
                }
    return true;
}

bool plucker_check(const Presentation* p) {
    return plucker_check(generator_matrix(p), p->n(), p->vars());
}

Element pf_cofactor(const Presentation* p, int i, int j) {
    if (i == j) return p->zero();
    IndexSet rest = complement({std::min(i, j), std::max(i, j)}, p->n());
    int e = i < j ? i - j : i - j - 1;
    return pf_bracket(p, rest) * sc_neg_q(p->vars(), e);
}

EMat pf_comatrix(const Presentation* p) {
    const int N = p->n();
    EMat out(N, std::vector<Element>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) out[i - 1][j - 1] = pf_cofactor(p, i, j);
    return out;
}

bool pf_orthogonality(const Presentation* p) {
    const int N = p->n();
    Element pf = pfaffian(p);
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            Element row, col;
            for (int j = 1; j <= N; ++j) {
                row += p->x_entry(i, j) * pf_cofactor(p, j, k);
                col += pf_cofactor(p, k, j) * p->x_entry(j, i);
            }
            Element want = i == k ? pf : p->zero();
            if (row != want || col != want) return false;
        }
    return true;
}

Element omega_power_coeff(int N, VarSetPtr vars) {
    const int n = N / 2;
    const Presentation* ext = Presentation::make(PresKind::XSpWithExt, N, vars);
    const Presentation* sp = Presentation::make(PresKind::XSp, N, vars);
    Element omega = ext->zero();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            omega += ext->x_entry(i, j) * ext->y_entry(i) * ext->y_entry(j);
    Element pw = ext->one();
    for (int k = 0; k < n; ++k) pw = pw * omega;
    // extract the coefficient of y_1 ... y_N
    Element out(sp);
    for (const auto& [w, c] : pw.terms()) {
        Word xs, ys;
        for (const Gen& g : w) (g.fam == Family::Y ? ys : xs).push_back(g);
        if (static_cast<int>(ys.size()) != N) continue;
        bool full = true;
        for (int i = 0; i < N; ++i) full = full && ys[i].i == i + 1;
        if (!full) continue;
        out += Element::from_terms(sp, {{xs, c}}, true);
    }
    return out;
}

bool omega_power_check(int N, VarSetPtr vars) {
    const int n = N / 2;
    const Presentation* sp = Presentation::make(PresKind::XSp, N, vars);
    Scalar q2 = sc_q(vars, 2);
    Scalar pref = (Scalar(vars, 1) + q2).pow(n) * q_factorial(n, sc_q(vars, 4));
    return omega_power_coeff(N, vars) == pfaffian(sp) * pref;
}

std::shared_ptr<const CentralTag> pf_tag(const Presentation* p) {
    static std::mutex mu;
    static std::map<const Presentation*, std::shared_ptr<const CentralTag>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto tag = std::make_shared<const CentralTag>("Pf", pfaffian(p));
    cache.emplace(p, tag);
    return tag;
}

}  // namespace qx
