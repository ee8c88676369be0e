#include "qx/identities.hpp"

#include <numeric>

namespace qx {

namespace {

using Kind = IdentityDescriptor::Kind;

IndexSet range_set(int lo, int hi) {
    IndexSet out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

EMat submatrix(const EMat& X, const IndexSet& I, const IndexSet& J) {
    EMat S(I.size(), std::vector<Element>(J.size()));
    for (size_t a = 0; a < I.size(); ++a)
        for (size_t b = 0; b < J.size(); ++b)
            S[a][b] = X[I[a] - 1][J[b] - 1];
    return S;
}

Element power(const Element& e, int k, const Element& one) {
    Element out = one;
    for (int i = 0; i < k; ++i) out = out * e;
    return out;
}

void check_factor_set(Kind kind, const IndexSet& I, int N) {
    if (!is_index_set(I, N)) throw NcError("identity: malformed index set");
    if (kind == Kind::Pf && I.size() % 2 != 0)
        throw NcError("identity: pf factor of odd size");
}

/// Image of a normal-formed element of the small algebra under the map
/// sending generator (i, j) to Xt[i-1][j-1].
Element map_element(const Element& e, const EMat& Xt, const Element& one) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element prod = one;
        for (const Gen& g : w) prod = prod * Xt[g.i - 1][g.j - 1];
        out += prod * c;
    }
    return out;
}

/// Pfaffian comatrix of an arbitrary q-antisymmetric entry matrix, by the
/// cofactor formula over positions.
EMat pf_comatrix_of(const EMat& A, VarSetPtr vars, const Element& one) {
    const int dim = static_cast<int>(A.size());
    EMat out(dim, std::vector<Element>(dim));
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) {
            if (i == j) continue;
            IndexSet comp;
            for (int k = 1; k <= dim; ++k)
                if (k != i && k != j) comp.push_back(k);
            out[i - 1][j - 1] = pf_shuffle_generic(A, comp, vars, false, one) *
                                sc_neg_q(vars, i < j ? i - j : i - j - 1);
        }
    return out;
}

}  // namespace

Element minor_value(Kind kind, const Presentation* p, const IndexSet& I) {
    check_factor_set(kind, I, p->n());
    if (kind == Kind::Pf) {
        if (!p->symplectic()) throw NcError("pf minor over a non-symplectic case");
        return pf_bracket(p, I);
    }
    if (I.empty()) return p->one();
    EMat S = submatrix(generator_matrix(p), I, I);
    return sdet_of_matrix(S, p->vars(), false, p->one());
}

bool evaluate_identity(const IdentityDescriptor& d, const Presentation* p) {
    const int N = p->n();
    auto den_set = [&](const IdFactor& f) {
        return f.I.empty() ? range_set(1, N) : f.I;
    };
    std::map<IndexSet, int> maxpow;
    for (const IdTerm& t : d.terms) {
        std::map<IndexSet, int> cnt;
        for (const IdFactor& f : t.factors) {
            if (f.inverse)
                ++cnt[den_set(f)];
            else
                check_factor_set(d.kind, f.I, N);
        }
        for (const auto& [D, c] : cnt) maxpow[D] = std::max(maxpow[D], c);
    }
    Element sum = p->zero();
    for (const IdTerm& t : d.terms) {
        std::map<IndexSet, int> cnt;
        for (const IdFactor& f : t.factors)
            if (f.inverse) ++cnt[den_set(f)];
        Element prod = p->one();
        for (const auto& [D, mp] : maxpow) {
            auto it = cnt.find(D);
            const int extra = mp - (it == cnt.end() ? 0 : it->second);
            for (int e = 0; e < extra; ++e)
                prod = prod * minor_value(d.kind, p, D);
        }
        for (const IdFactor& f : t.factors)
            if (!f.inverse) prod = prod * minor_value(d.kind, p, f.I);
        sum += prod * t.coeff;
    }
    return sum.is_zero();
}

bool jacobi_check(Kind kind, const Presentation* p, const IndexSet& I) {
    const int N = p->n();
    check_factor_set(kind, I, N);
    IndexSet C = complement(I, N);
    auto Y = y_matrix(p);
    LocalElement lone = local_of(p, p->one());
    VarSetPtr vars = p->vars();
    LocalElement lhs;
    if (kind == Kind::Pf) {
        if (!p->symplectic() || C.size() % 2 != 0)
            throw NcError("jacobi: pf kind needs symplectic, even sets");
        lhs = pf_shuffle_generic(Y, C, vars, true, lone);
        LocalElement pf_inv(p->one(), 1, pf_tag(p));
        return lhs == local_of(p, pf_bracket(p, I)) * pf_inv;
    }
    std::vector<std::vector<LocalElement>> S(C.size(),
                                             std::vector<LocalElement>(C.size()));
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b)
            S[a][b] = Y[C[a] - 1][C[b] - 1];
    lhs = sdet_of_matrix(S, vars, true, lone);
    return lhs == local_of(p, minor_value(Kind::Sdet, p, I)) * sdet_inverse(p);
}

IdentityDescriptor cayley_transform(const IdentityDescriptor& d, int N) {
    IdentityDescriptor out{d.kind, {}};
    for (const IdTerm& t : d.terms) {
        IdTerm nt;
        nt.coeff = t.coeff.bar();
        for (const IdFactor& f : t.factors) {
            if (f.inverse)
                throw NcError("cayley: descriptor already carries inverses");
            nt.factors.push_back({true, {}});
            nt.factors.push_back({false, complement(f.I, N)});
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

IdentityDescriptor muir_law_transform(const IdentityDescriptor& d,
                                      const IndexSet& J) {
    if (d.kind == Kind::Pf && J.size() % 2 != 0)
        throw NcError("muir: pf kind needs |J| even");
    IdentityDescriptor out{d.kind, {}};
    for (const IdTerm& t : d.terms) {
        IdTerm nt;
        nt.coeff = t.coeff;
        for (const IdFactor& f : t.factors) {
            if (f.inverse) throw NcError("muir: descriptor already carries inverses");
            IndexSet u = f.I;
            for (int j : J) {
                if (std::find(u.begin(), u.end(), j) != u.end())
                    throw NcError("muir: J meets a factor index set");
                u.push_back(j);
            }
            std::sort(u.begin(), u.end());
            nt.factors.push_back({true, J});
            nt.factors.push_back({false, std::move(u)});
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

bool muir_trace_check(Case c, int N, int k) {
    const Presentation* p =
        Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N);
    VarSetPtr vars = p->vars();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 1);
    auto bracket = bracket_chain(generator_matrix(p), order, vars);
    for (int variant = 0; variant < 2; ++variant) {
        Element total;
        for (int r = 0; r <= k; ++r) {
            std::vector<TensorOp> ops;
            if (r >= 1) {
                TensorOp first = variant == 0 ? symmetrizer(N, r, vars)
                                              : antisymmetrizer(N, r, vars);
                ops.push_back(first.embed(k, range_set(1, r)));
            }
            if (k - r >= 1) {
                TensorOp second = variant == 0 ? antisymmetrizer(N, k - r, vars)
                                               : symmetrizer(N, k - r, vars);
                ops.push_back(second.embed(k, range_set(r + 1, k)));
            }
            ops.insert(ops.end(), bracket.begin(), bracket.end());
            total += chain_trace(ops, N, k, p) * Scalar(vars, r % 2 == 0 ? 1 : -1);
        }
        if (!total.is_zero()) return false;
    }
    return true;
}

bool sylvester_check(Kind kind, Case c, int N, int M, bool literal_cols) {
    if (kind == Kind::Pf) {
        if (c != Case::Sp || N % 2 != 0 || M % 2 != 0)
            throw NcError("sylvester: pf kind needs symplectic even sizes");
        const Presentation* P = Presentation::make(PresKind::XSp, N + M);
        VarSetPtr vars = P->vars();
        const Presentation* small = Presentation::make(PresKind::XSp, N, vars);
        IndexSet J = range_set(N + 1, N + M);
        EMat Xt(N, std::vector<Element>(N, P->zero()));
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                IndexSet S = {i, j};
                S.insert(S.end(), J.begin(), J.end());
                Xt[i - 1][j - 1] = pf_bracket(P, S);
                Xt[j - 1][i - 1] = Xt[i - 1][j - 1] * sc_neg_q(vars, 1);
            }
        for (const Gen& g : small->generators())
            for (const Gen& h : small->generators()) {
                Element nf = small->gen_element(g) * small->gen_element(h);
                Element lhs = Xt[g.i - 1][g.j - 1] * Xt[h.i - 1][h.j - 1];
                if (!(lhs == map_element(nf, Xt, P->one()))) return false;
            }
        Element lhs = pf_shuffle_generic(Xt, range_set(1, N), vars, false, P->one());
        Element rhs = power(pf_bracket(P, J), N / 2 - 1, P->one()) *
                      pf_bracket(P, range_set(1, N + M));
        return lhs == rhs;
    }
    if (c == Case::Sp && (N % 2 != 0 || M % 2 != 0))
        throw NcError("sylvester: symplectic sizes must be even");
    const Presentation* P =
        Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N + M);
    VarSetPtr vars = P->vars();
    const Presentation* small =
        Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N, vars);
    IndexSet J = literal_cols ? range_set(M + 1, M + N) : range_set(N + 1, N + M);
    EMat Xt(N, std::vector<Element>(N, P->zero()));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            MultiIdx rows = {i}, cols = {j};
            rows.insert(rows.end(), J.begin(), J.end());
            cols.insert(cols.end(), J.begin(), J.end());
            Xt[i - 1][j - 1] = sklyanin_minor(P, rows, cols);
        }
    // the images must reproduce the symmetry canonicalization of the small case
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            Element expect = c == Case::O ? Xt[j - 1][i - 1] * sc_q(vars, -1)
                                          : Xt[j - 1][i - 1] * sc_neg_q(vars, 1);
            if (!(Xt[i - 1][j - 1] == expect)) return false;
        }
    if (c == Case::Sp)
        for (int i = 1; i <= N; ++i)
            if (!Xt[i - 1][i - 1].is_zero()) return false;
    for (const Gen& g : small->generators())
        for (const Gen& h : small->generators()) {
            Element nf = small->gen_element(g) * small->gen_element(h);
            Element lhs = Xt[g.i - 1][g.j - 1] * Xt[h.i - 1][h.j - 1];
            if (!(lhs == map_element(nf, Xt, P->one()))) return false;
        }
    Element lhs = sdet_of_matrix(Xt, vars, false, P->one());
    Element rhs = power(minor_value(Kind::Sdet, P, J), N - 1, P->one()) * sdet(P);
    return lhs == rhs;
}

bool grassmann_plucker_check(int n, int m, int convention) {
    if (n % 2 == 0 || m % 2 == 0) throw NcError("gp: n, m must be odd");
    const Presentation* p = Presentation::make(PresKind::XSp, n + m);
    VarSetPtr vars = p->vars();
    IndexSet I = range_set(1, n), J = range_set(n + 1, n + m);
    Element lhs, rhs;
    for (int j = 1; j <= n; ++j) {
        IndexSet a, b = {j};
        for (int k : I)
            if (k != j) a.push_back(k);
        b.insert(b.end(), J.begin(), J.end());
        lhs += pf_bracket(p, a) * pf_bracket(p, b) * sc_neg_q(vars, n - j);
    }
    for (int j = n + 1; j <= n + m; ++j) {
        IndexSet a = I, b;
        a.push_back(j);
        for (int k : J)
            if (k != j) b.push_back(k);
        const int e = convention == 1 ? j - n : j - n - 1;
        rhs += pf_bracket(p, a) * pf_bracket(p, b) * sc_neg_q(vars, e);
    }
    return lhs == rhs;
}

int grassmann_plucker_convention(int n, int m) {
    const bool proof = grassmann_plucker_check(n, m, 0);
    const bool statement = grassmann_plucker_check(n, m, 1);
    if (proof && statement) return 2;
    if (proof) return 0;
    if (statement) return 1;
    return -1;
}

bool quasidet_factorization_check(Kind kind, const Presentation* p,
                                  const std::vector<int>& sigma) {
    const int N = p->n();
    VarSetPtr vars = p->vars();
    {
        std::vector<int> s = sigma;
        std::sort(s.begin(), s.end());
        if (s != range_set(1, N)) throw NcError("quasidet: sigma is not a permutation");
    }
    EMat X = generator_matrix(p);
    auto pos_in = [](const IndexSet& S, int x) {
        for (size_t k = 0; k < S.size(); ++k)
            if (S[k] == x) return static_cast<int>(k) + 1;
        throw NcError("quasidet: internal position lookup");
    };
    std::vector<Element> D;  // cleared factors along the chain
    if (kind == Kind::Sdet) {
        for (int k = 1; k <= N; ++k) {
            IndexSet S(sigma.begin(), sigma.begin() + k);
            std::sort(S.begin(), S.end());
            EMat Ms = submatrix(X, S, S);
            Element dk = sdet_of_matrix(Ms, vars, false, p->one());
            if (k >= 2) {
                IndexSet Sp(sigma.begin(), sigma.begin() + k - 1);
                std::sort(Sp.begin(), Sp.end());
                EMat C = comatrix_of_matrix(Ms, vars, false, p->one());
                const int a = pos_in(S, sigma[k - 1]);
                // inverse-matrix reading of the quasideterminant: the diagonal
                // comatrix entry is the complementary principal minor
                if (!(C[a - 1][a - 1] == minor_value(kind, p, Sp))) return false;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        Element acc;
                        for (int l = 0; l < k; ++l) acc += C[i][l] * Ms[l][j];
                        if (!(acc == (i == j ? dk : p->zero()))) return false;
                    }
            }
            D.push_back(std::move(dk));
        }
        if (!(D.back() == sdet(p))) return false;
    } else {
        if (!p->symplectic() || N % 2 != 0)
            throw NcError("quasidet: pf kind needs an even symplectic case");
        const int n = N / 2;
        int esum = 0;
        for (int k = 1; k <= n; ++k) {
            if (sigma[2 * k - 2] >= sigma[2 * k - 1])
                throw NcError("quasidet: sigma pairs must be increasing");
            IndexSet S(sigma.begin(), sigma.begin() + 2 * k);
            std::sort(S.begin(), S.end());
            Element dk = pf_bracket(p, S);
            if (k >= 2) {
                IndexSet Sp(sigma.begin(), sigma.begin() + 2 * k - 2);
                std::sort(Sp.begin(), Sp.end());
                EMat Ms = submatrix(X, S, S);
                EMat C = pf_comatrix_of(Ms, vars, p->one());
                const int a = pos_in(S, sigma[2 * k - 2]);
                const int b = pos_in(S, sigma[2 * k - 1]);
                esum += b - a - 1;
                if (!(C[b - 1][a - 1] ==
                      minor_value(kind, p, Sp) * sc_neg_q(vars, b - a - 1)))
                    return false;
                for (int i = 0; i < 2 * k; ++i)
                    for (int j = 0; j < 2 * k; ++j) {
                        Element acc;
                        for (int l = 0; l < 2 * k; ++l) acc += C[i][l] * Ms[l][j];
                        if (!(acc == (i == j ? dk : p->zero()))) return false;
                    }
            }
            D.push_back(std::move(dk));
        }
        int theta = 0;
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= 2 * k - 2; ++i)
                if (sigma[2 * k - 2] < sigma[i - 1] && sigma[i - 1] < sigma[2 * k - 1])
                    ++theta;
        if (theta != esum) return false;
        if (!(D.back() == pfaffian(p))) return false;
    }
    for (size_t i = 0; i < D.size(); ++i)
        for (size_t j = i + 1; j < D.size(); ++j)
            if (!(D[i] * D[j] == D[j] * D[i])) return false;
    return true;
}

std::vector<IdentityDescriptor> seed_catalog(Kind kind, int N) {
    VarSetPtr vars = VarSet::base();
    Scalar one(vars, 1), mone(vars, -1), q = sc_q(vars);
    std::vector<IdentityDescriptor> out;
    auto diff = [&](const IndexSet& I, const Scalar& c) {
        return IdentityDescriptor{kind,
                                  {{c, {{false, I}}}, {c * mone, {{false, I}}}}};
    };
    auto commutator = [&](const IndexSet& A, const IndexSet& B) {
        return IdentityDescriptor{
            kind,
            {{one, {{false, A}, {false, B}}}, {mone, {{false, B}, {false, A}}}}};
    };
    if (kind == Kind::Sdet) {
        out.push_back(diff({1, 2}, one));
        out.push_back(commutator({1}, {1, 2}));
        out.push_back(diff(range_set(1, N), q));
        if (N >= 3) out.push_back(commutator({N}, {1, N}));
        // unit minor over the empty set
        out.push_back(IdentityDescriptor{
            kind, {{one, {{false, {}}, {false, {1, 2}}}}, {mone, {{false, {1, 2}}}}}});
    } else {
        out.push_back(diff({1, 2}, one));
        out.push_back(diff(range_set(1, N), q));
        out.push_back(IdentityDescriptor{
            kind, {{one, {{false, {}}, {false, {1, 2}}}}, {mone, {{false, {1, 2}}}}}});
        if (N >= 4) {
            out.push_back(commutator({1, 2}, {1, 2, 3, 4}));
            out.push_back(commutator({3, 4}, {1, 2, 3, 4}));
        }
    }
    return out;
}

}  // namespace qx
