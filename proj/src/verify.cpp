#include "qx/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

namespace qx {

namespace {

using Kind = IdentityDescriptor::Kind;

struct Instance {
    std::string name;
    std::string case_name;  // "O", "Sp", "Mat", "-"
    int N;
    std::map<std::string, std::string> params;
    std::function<void(Report&, const VerifyOptions&)> fn;
};

const Presentation* pres(Case c, int N, VarSetPtr vars = nullptr) {
    return Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N,
                              std::move(vars));
}

TensorOp one_site(const Presentation* p, bool transpose, Family fam) {
    const int N = p->n();
    TensorOp x(N, 1);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Element e = fam == Family::T
                            ? p->t_entry(transpose ? j : i, transpose ? i : j)
                            : p->x_entry(transpose ? j : i, transpose ? i : j);
            x.add_entry({i}, {j}, e);
        }
    return x;
}

Element epow(const Element& e, int k, const Element& one) {
    Element out = one;
    for (int i = 0; i < k; ++i) out = out * e;
    return out;
}

std::string set_str(const IndexSet& I) {
    std::string s;
    for (size_t k = 0; k < I.size(); ++k)
        s += (k ? "," : "") + std::to_string(I[k]);
    return s.empty() ? "-" : s;
}

std::vector<IndexSet> subsets(int N, int parity = -1) {
    std::vector<IndexSet> out;
    for (int mask = 0; mask < (1 << N); ++mask) {
        IndexSet I;
        for (int k = 1; k <= N; ++k)
            if (mask & (1 << (k - 1))) I.push_back(k);
        if (parity >= 0 && static_cast<int>(I.size()) % 2 != parity) continue;
        out.push_back(std::move(I));
    }
    return out;
}

/// Incremental Gaussian elimination over the Scalar coefficient field; true
/// iff the given elements are linearly independent.
bool independent(const std::vector<Element>& elems) {
    std::vector<std::map<Word, Scalar>> rows;
    for (const Element& e : elems) {
        std::map<Word, Scalar> r = e.terms();
        for (const auto& basis : rows) {
            if (r.empty()) break;
            auto pit = basis.begin();
            auto hit = r.find(pit->first);
            if (hit == r.end()) continue;
            Scalar f = hit->second / pit->second;
            for (const auto& [w, c] : basis) {
                auto it = r.find(w);
                Scalar v = (it == r.end() ? Scalar(c.vars(), 0) : it->second) - f * c;
                if (v.is_zero())
                    r.erase(w);
                else
                    r[w] = v;
            }
        }
        if (r.empty()) return false;
        rows.push_back(std::move(r));
    }
    return true;
}

// -- check bodies -------------------------------------------------------------

bool check_rtt(int N) {
    const Presentation* p = Presentation::make(PresKind::MatN, N);
    VarSetPtr v = p->vars();
    TensorOp t1 = one_site(p, false, Family::T).embed(2, {1});
    TensorOp t2 = one_site(p, false, Family::T).embed(2, {2});
    TensorOp R = op_R(N, v);
    return R * t1 * t2 == t2 * t1 * R;
}

bool check_reflection(Case c, int N) {
    auto vs = VarSet::spectral();
    Scalar l = Scalar::variable(vs, vs->index_of("l"));
    const Presentation* p = pres(c, N, vs);
    TensorOp x1 = one_site(p, false, Family::X).embed(2, {1});
    TensorOp x2 = one_site(p, false, Family::X).embed(2, {2});
    TensorOp rt = op_Rt1(N, vs);
    TensorOp rh = op_Rhat(N, l);
    return rh * x1 * rt * x2 == x1 * rt * x2 * rh;
}

bool check_basic_r(int N) {
    VarSetPtr v = VarSet::base();
    TensorOp R = op_R(N, v);
    if (!(R * op_Rminus(N, v) == TensorOp::identity(N, 2, v))) return false;
    if (!(op_Rplus(N, v) == op_P(N, v) * R * op_P(N, v))) return false;
    if (N == 2) {
        Scalar q = sc_q(v);
        if (!(R.entry({1, 1}, {1, 1}) == scalar_entry(q))) return false;
        if (!(R.entry({2, 1}, {1, 2}) == scalar_entry(sc_q_minus_qinv(v))))
            return false;
    }
    return true;
}

bool check_ybe(int N) {
    auto v = VarSet::spectral();
    Scalar l = Scalar::variable(v, v->index_of("l"));
    Scalar m = Scalar::variable(v, v->index_of("m"));
    auto Rr = [&](const Scalar& s, int a, int b) {
        return op_Rlambda(N, s).embed(3, {a, b});
    };
    return Rr(l / m, 1, 2) * Rr(l, 1, 3) * Rr(m, 2, 3) ==
           Rr(m, 2, 3) * Rr(l, 1, 3) * Rr(l / m, 1, 2);
}

bool check_braid(int N) {
    auto v = VarSet::spectral();
    Scalar l = Scalar::variable(v, v->index_of("l"));
    Scalar m = Scalar::variable(v, v->index_of("m"));
    auto Rh = [&](const Scalar& s, int a, int b) {
        return op_Rhat(N, s).embed(3, {a, b});
    };
    return Rh(l / m, 1, 2) * Rh(l, 2, 3) * Rh(m, 1, 2) ==
           Rh(m, 2, 3) * Rh(l, 1, 2) * Rh(l / m, 2, 3);
}

bool check_embedding(Case c, int N) {
    const int k = c == Case::O ? N : N / 2;
    auto vars = VarSet::with_params(k);
    auto a = symbolic_params(vars, k);
    const Presentation* p = pres(c, N, vars);
    for (const Gen& g : p->generators())
        for (const Gen& h : p->generators()) {
            Element ge = p->gen_element(g), he = p->gen_element(h);
            if (!(phi_embed(ge * he, c, a) ==
                  phi_embed(ge, c, a) * phi_embed(he, c, a)))
                return false;
        }
    return true;
}

bool check_coideal(Case c, int N, bool symbolic) {
    const int k = c == Case::O ? N : N / 2;
    auto vars = VarSet::with_params(k);
    auto a = symbolic ? symbolic_params(vars, k) : unit_params(vars, k);
    return coideal_check(c, N, a, vars);
}

bool check_sdet_det2(Case c, int N) {
    const int k = c == Case::O ? N : N / 2;
    auto vars = VarSet::with_params(k);
    auto a = symbolic_params(vars, k);
    const Presentation* p = pres(c, N, vars);
    const Presentation* mat = Presentation::make(PresKind::MatN, N, vars);
    Element d = det_q(mat);
    Scalar gamma = Scalar::one(vars);
    for (const Scalar& ai : a) gamma = gamma * (c == Case::O ? ai : ai * ai);
    if (c == Case::Sp) gamma = gamma * sc_q(vars, 3 * (N / 2));
    return phi_embed(sdet(p), c, a) == d * d * gamma;
}

bool check_sdet_explicit(Case c, int N) {
    const Presentation* p = pres(c, N);
    return sdet_explicit(p) == sdet(p);
}

bool check_comatrix(Case c, int N) {
    const Presentation* p = pres(c, N);
    EMat hat = sklyanin_comatrix(p);
    EMat X = generator_matrix(p);
    Element d = sdet(p);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Element acc;
            for (int l = 0; l < N; ++l) acc += hat[i][l] * X[l][j];
            if (!(acc == (i == j ? d : p->zero()))) return false;
        }
    return true;
}

bool check_y_relations(Case c, int N) {
    const Presentation* p = pres(c, N);
    auto Y = y_matrix(p);
    VarSetPtr v = p->vars();
    // symmetry canonicalization in the q^{-1} structure
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            LocalElement expect = c == Case::O ? Y[j - 1][i - 1] * sc_q(v, 1)
                                               : -(Y[j - 1][i - 1] * sc_q(v, -1));
            if (!(Y[i - 1][j - 1] == expect)) return false;
        }
    if (c == Case::Sp)
        for (int i = 0; i < N; ++i)
            if (!Y[i][i].is_zero()) return false;
    // every defining swap rule with bar-involuted coefficients
    for (const Gen& g : p->generators())
        for (const Gen& h : p->generators()) {
            if (!p->needs_rewrite(g, h)) continue;
            LocalElement lhs = Y[g.i - 1][g.j - 1] * Y[h.i - 1][h.j - 1];
            LocalElement rhs;
            for (const auto& [w, coeff] : p->straighten({g, h})) {
                LocalElement prod = local_of(p, p->one());
                for (const Gen& gg : w) prod = prod * Y[gg.i - 1][gg.j - 1];
                rhs = rhs + prod * coeff.bar();
            }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool check_omega_relations(Case c, int N) {
    const Presentation* p = pres(c, N);
    for (const Gen& g : p->generators())
        for (const Gen& h : p->generators()) {
            Element prod = p->gen_element(g) * p->gen_element(h);
            if (!(omega_apply(p, prod) ==
                  omega_gen(p, g.i, g.j) * omega_gen(p, h.i, h.j)))
                return false;
        }
    return true;
}

bool check_omega_involution(Case c, int N) {
    const Presentation* p = pres(c, N);
    auto tag = sdet_tag(p);
    for (const Gen& g : p->generators()) {
        LocalElement w = omega_gen(p, g.i, g.j);
        Element den = tag->power(w.denpow());
        if (!(omega_apply(p, w.num()) ==
              local_of(p, p->gen_element(g)) * omega_apply(p, den)))
            return false;
    }
    return true;
}

bool check_pf_shuffle_vs_def(int N) {
    const Presentation* p = pres(Case::Sp, N);
    VarSetPtr v = p->vars();
    EMat X = generator_matrix(p);
    if (N <= 4) {
        for (const IndexSet& I : subsets(N, 0)) {
            Element s = pf_shuffle(X, I, v, p->one());
            if (!(s == pf_definition(X, I, v, p->one()))) return false;
            if (!(s == pf_laplace(X, I, v, p->one()))) return false;
        }
        return true;
    }
    for (const IndexSet& I : subsets(N, 0)) {
        if (I.size() != 4) continue;
        Element s = pf_shuffle(X, I, v, p->one());
        if (!(s == pf_definition(X, I, v, p->one()))) return false;
        if (!(s == pf_laplace(X, I, v, p->one()))) return false;
    }
    IndexSet full(N);
    std::iota(full.begin(), full.end(), 1);
    return pf_shuffle(X, full, v, p->one()) == pf_laplace(X, full, v, p->one());
}

bool check_sdet_pf(int N) {
    const Presentation* p = pres(Case::Sp, N);
    Element f = pfaffian(p);
    return sdet(p) == f * f * sc_q(p->vars(), 3 * (N / 2));
}

bool check_center(Kind kind, Case c, int N) {
    const Presentation* p = pres(c, N);
    Element z = kind == Kind::Pf ? pfaffian(p) : sdet(p);
    if (!is_central(z)) return false;
    std::vector<Element> pows;
    for (int k = 0; k <= 3; ++k) pows.push_back(epow(z, k, p->one()));
    return independent(pows);
}

bool check_phi_pf(int N) {
    const int n = N / 2;
    auto vars = VarSet::with_params(n);
    auto a = symbolic_params(vars, n);
    const Presentation* p = pres(Case::Sp, N, vars);
    const Presentation* mat = Presentation::make(PresKind::MatN, N, vars);
    Scalar gamma = Scalar::one(vars);
    for (const Scalar& ai : a) gamma = gamma * ai;
    return phi_embed(pfaffian(p), Case::Sp, a) == det_q(mat) * gamma;
}

bool check_cayley(Kind kind, Case c, int N) {
    const Presentation* p = pres(c, N);
    for (const IdentityDescriptor& d : seed_catalog(kind, N)) {
        if (!evaluate_identity(d, p)) return false;
        IdentityDescriptor cd = cayley_transform(d, N);
        if (!evaluate_identity(cd, p)) return false;
        // double complement restores the plain index sets
        for (size_t i = 0; i < d.terms.size(); ++i) {
            size_t k = 0;
            for (const IdFactor& f : cd.terms[i].factors) {
                if (f.inverse) continue;
                if (complement(f.I, N) != d.terms[i].factors[k++].I) return false;
            }
            if (!(cd.terms[i].coeff.bar() == d.terms[i].coeff)) return false;
        }
    }
    return true;
}

bool check_muir_law(Kind kind, Case c, int N, int ground, const IndexSet& J) {
    const Presentation* p = pres(c, N);
    for (const IdentityDescriptor& d : seed_catalog(kind, ground)) {
        if (!evaluate_identity(muir_law_transform(d, J), p)) return false;
    }
    return true;
}

// -- registry -----------------------------------------------------------------

std::vector<Instance> build_registry() {
    std::vector<Instance> reg;
    auto add = [&](std::string name, std::string cs, int N,
                   std::map<std::string, std::string> params,
                   std::function<void(Report&, const VerifyOptions&)> fn) {
        reg.push_back({std::move(name), std::move(cs), N, std::move(params),
                       std::move(fn)});
    };
    auto simple = [](std::function<bool()> f) {
        return [f = std::move(f)](Report& r, const VerifyOptions&) {
            r.holds = f();
        };
    };

    for (int N : {2, 3})
        add("rtt", "Mat", N, {}, simple([N] { return check_rtt(N); }));
    for (int N : {2, 3})
        add("reflection", "O", N, {},
            simple([N] { return check_reflection(Case::O, N); }));
    for (int N : {2, 4})
        add("reflection", "Sp", N, {},
            simple([N] { return check_reflection(Case::Sp, N); }));
    for (int N : {2, 3})
        add("basic-r", "-", N, {}, simple([N] { return check_basic_r(N); }));
    for (int N : {2, 3})
        add("ybe", "-", N, {}, simple([N] { return check_ybe(N); }));
    for (int N : {2, 3})
        add("braid", "-", N, {}, simple([N] { return check_braid(N); }));
    for (int N : {2, 3})
        add("embedding", "O", N, {{"a", "symbolic"}},
            simple([N] { return check_embedding(Case::O, N); }));
    for (int N : {2, 4})
        add("embedding", "Sp", N, {{"a", "symbolic"}},
            simple([N] { return check_embedding(Case::Sp, N); }));
    for (int N : {2, 3})
        add("coideal", "O", N, {},
            [N](Report& r, const VerifyOptions& o) {
                r.params["a"] = o.symbolic_a ? "symbolic" : "unit";
                r.holds = check_coideal(Case::O, N, o.symbolic_a);
            });
    for (int N : {2, 4})
        add("coideal", "Sp", N, {},
            [N](Report& r, const VerifyOptions& o) {
                r.params["a"] = o.symbolic_a ? "symbolic" : "unit";
                r.holds = check_coideal(Case::Sp, N, o.symbolic_a);
            });
    for (int N : {2, 3})
        add("sdet-det2", "O", N, {{"a", "symbolic"}},
            simple([N] { return check_sdet_det2(Case::O, N); }));
    for (int N : {2, 4})
        add("sdet-det2", "Sp", N, {{"a", "symbolic"}},
            simple([N] { return check_sdet_det2(Case::Sp, N); }));
    for (int N : {1, 2, 3})
        add("sdet-explicit", "O", N, {}, [N](Report& r, const VerifyOptions&) {
            r.holds = check_sdet_explicit(Case::O, N);
            r.notes.push_back("base case: both length-2 chains map to the identity");
        });
    for (int N : {2, 4})
        add("sdet-explicit", "Sp", N, {}, [N](Report& r, const VerifyOptions&) {
            r.holds = check_sdet_explicit(Case::Sp, N);
            r.notes.push_back("base case: both length-2 chains map to the identity");
        });
    for (int N : {2, 3})
        add("comatrix", "O", N, {}, simple([N] { return check_comatrix(Case::O, N); }));
    for (int N : {2, 4})
        add("comatrix", "Sp", N, {},
            simple([N] { return check_comatrix(Case::Sp, N); }));
    for (int N : {2, 3})
        add("y-relations", "O", N, {},
            simple([N] { return check_y_relations(Case::O, N); }));
    for (int N : {2, 4})
        add("y-relations", "Sp", N, {},
            simple([N] { return check_y_relations(Case::Sp, N); }));
    for (int N : {2, 3})
        add("omega", "O", N, {}, simple([N] {
                return check_omega_relations(Case::O, N) &&
                       check_omega_involution(Case::O, N);
            }));
    add("omega", "Sp", 2, {}, simple([] {
            return check_omega_relations(Case::Sp, 2) &&
                   check_omega_involution(Case::Sp, 2);
        }));
    add("omega", "Sp", 4, {}, simple([] { return check_omega_relations(Case::Sp, 4); }));

    auto add_jacobi = [&](Kind kind, const char* name, Case c, int N, int parity) {
        for (const IndexSet& I : subsets(N, parity))
            add(name, c == Case::O ? "O" : "Sp", N, {{"I", set_str(I)}},
                [kind, c, N, I](Report& r, const VerifyOptions&) {
                    r.holds = jacobi_check(kind, pres(c, N), I);
                });
    };
    add_jacobi(Kind::Sdet, "jacobi-sdet", Case::O, 2, -1);
    add_jacobi(Kind::Sdet, "jacobi-sdet", Case::O, 3, -1);
    add_jacobi(Kind::Sdet, "jacobi-sdet", Case::Sp, 2, 0);
    add_jacobi(Kind::Sdet, "jacobi-sdet", Case::Sp, 4, 0);
    add_jacobi(Kind::Pf, "jacobi-pf", Case::Sp, 2, 0);
    add_jacobi(Kind::Pf, "jacobi-pf", Case::Sp, 4, 0);

    add("cayley", "O", 3, {{"kind", "sdet"}},
        simple([] { return check_cayley(Kind::Sdet, Case::O, 3); }));
    add("cayley", "Sp", 4, {{"kind", "pf"}},
        simple([] { return check_cayley(Kind::Pf, Case::Sp, 4); }));
    add("muir-law", "O", 3, {{"kind", "sdet"}, {"J", "3"}},
        simple([] { return check_muir_law(Kind::Sdet, Case::O, 3, 2, {3}); }));
    add("muir-law", "Sp", 4, {{"kind", "pf"}, {"J", "3,4"}},
        simple([] { return check_muir_law(Kind::Pf, Case::Sp, 4, 2, {3, 4}); }));

    for (int N : {1, 2, 3})
        for (int k = 1; k <= std::min(N, N == 3 ? 3 : 2); ++k)
            add("muir-trace", "O", N, {{"k", std::to_string(k)}},
                simple([N, k] { return muir_trace_check(Case::O, N, k); }));
    for (int N : {2, 4})
        for (int k = 1; k <= 2; ++k)
            add("muir-trace", "Sp", N, {{"k", std::to_string(k)}},
                simple([N, k] { return muir_trace_check(Case::Sp, N, k); }));

    auto sylv_note = std::string(
        "columns read as {i} u J with J = {N+1..N+M}; the literal variant "
        "coincides at N = M");
    add("sylvester-sdet", "O", 4, {{"small", "2"}, {"added", "2"}},
        [sylv_note](Report& r, const VerifyOptions&) {
            r.holds = sylvester_check(Kind::Sdet, Case::O, 2, 2);
            r.notes.push_back(sylv_note);
        });
    add("sylvester-sdet", "Sp", 4, {{"small", "2"}, {"added", "2"}},
        [sylv_note](Report& r, const VerifyOptions&) {
            r.holds = sylvester_check(Kind::Sdet, Case::Sp, 2, 2);
            r.notes.push_back(sylv_note);
        });
    auto pf_sylv_note = std::string(
        "determinant identity uses the exponent n-1 (half the small size)");
    add("sylvester-pf", "Sp", 4, {{"small", "2"}, {"added", "2"}},
        [pf_sylv_note](Report& r, const VerifyOptions&) {
            r.holds = sylvester_check(Kind::Pf, Case::Sp, 2, 2);
            r.notes.push_back(pf_sylv_note);
        });
    add("sylvester-pf", "Sp", 6, {{"small", "4"}, {"added", "2"}},
        [pf_sylv_note](Report& r, const VerifyOptions&) {
            r.holds = sylvester_check(Kind::Pf, Case::Sp, 4, 2);
            r.notes.push_back(pf_sylv_note);
        });

    for (int n = 1; n <= 5; n += 2)
        for (int m = 1; n + m <= 6; m += 2)
            add("gp", "Sp", n + m,
                {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                [n, m](Report& r, const VerifyOptions&) {
                    r.holds = grassmann_plucker_check(n, m, 0);
                    r.notes.push_back(
                        "exponent convention: (-q)^(j-n-1), the proof's "
                        "expansion; the displayed (-q)^(j-n) fails at n=m=1");
                });

    for (int N : {2, 4})
        add("pf-orthogonality", "Sp", N, {},
            simple([N] { return pf_orthogonality(pres(Case::Sp, N)); }));
    for (int N : {4, 6})
        add("pf-shuffle-vs-def", "Sp", N, {},
            simple([N] { return check_pf_shuffle_vs_def(N); }));
    for (int N : {4, 6})
        add("plucker", "Sp", N, {},
            simple([N] { return plucker_check(pres(Case::Sp, N)); }));
    for (int N : {2, 4})
        add("omega-power", "Sp", N, {},
            simple([N] { return omega_power_check(N, VarSet::base()); }));
    for (int N : {2, 4})
        add("sdet-pf", "Sp", N, {}, simple([N] { return check_sdet_pf(N); }));
    for (int N : {2, 4})
        add("sdet-pf", "Sp", N, {{"phi", "symbolic"}},
            simple([N] { return check_phi_pf(N); }));
    for (int N : {2, 3})
        add("center-sdet", "O", N, {},
            simple([N] { return check_center(Kind::Sdet, Case::O, N); }));
    for (int N : {2, 4})
        add("center-sdet", "Sp", N, {},
            simple([N] { return check_center(Kind::Sdet, Case::Sp, N); }));
    for (int N : {2, 4})
        add("center-pf", "Sp", N, {},
            simple([N] { return check_center(Kind::Pf, Case::Sp, N); }));

    {
        std::vector<int> sigma = {1, 2};
        do {
            add("quasidet-sdet", "O", 2, {{"sigma", set_str(sigma)}},
                [sigma](Report& r, const VerifyOptions&) {
                    r.holds = quasidet_factorization_check(Kind::Sdet,
                                                           pres(Case::O, 2), sigma);
                });
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    {
        std::vector<int> sigma = {1, 2, 3};
        do {
            add("quasidet-sdet", "O", 3, {{"sigma", set_str(sigma)}},
                [sigma](Report& r, const VerifyOptions&) {
                    r.holds = quasidet_factorization_check(Kind::Sdet,
                                                           pres(Case::O, 3), sigma);
                });
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    add("quasidet-pf", "Sp", 2, {{"sigma", "1,2"}},
        [](Report& r, const VerifyOptions&) {
            r.holds = quasidet_factorization_check(Kind::Pf, pres(Case::Sp, 2),
                                                   {1, 2});
        });
    {
        std::vector<int> sigma = {1, 2, 3, 4};
        do {
            if (sigma[0] > sigma[1] || sigma[2] > sigma[3]) continue;
            add("quasidet-pf", "Sp", 4, {{"sigma", set_str(sigma)}},
                [sigma](Report& r, const VerifyOptions&) {
                    r.holds = quasidet_factorization_check(Kind::Pf,
                                                           pres(Case::Sp, 4), sigma);
                });
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return reg;
}

const std::vector<Instance>& registry() {
    static const std::vector<Instance> reg = build_registry();
    return reg;
}

int cap_for(const std::string& case_name, const VerifyOptions& opt) {
    if (opt.max_n > 0) return opt.max_n;
    return case_name == "Sp" ? 4 : 3;
}

bool selected(const Instance& in, const std::string& name,
              const VerifyOptions& opt) {
    if (in.name != name) return false;
    if (in.N > cap_for(in.case_name, opt)) return false;
    if (!opt.case_filter.empty() && in.case_name != opt.case_filter) return false;
    if (opt.n_filter > 0 && in.N != opt.n_filter) return false;
    if (opt.has_index_set) {
        auto it = in.params.find("I");
        if (it == in.params.end()) it = in.params.find("sigma");
        if (it == in.params.end() || it->second != set_str(opt.index_set))
            return false;
    }
    return true;
}

Report run_instance(const Instance& in, const VerifyOptions& opt) {
    Report r;
    r.identity = in.name;
    r.case_name = in.case_name;
    r.N = in.N;
    r.params = in.params;
    auto t0 = std::chrono::steady_clock::now();
    in.fn(r, opt);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace

const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Instance& in : registry())
            if (out.empty() || out.back() != in.name) out.push_back(in.name);
        return out;
    }();
    return names;
}

std::vector<Report> run_verify(const std::string& name, const VerifyOptions& opt) {
    bool known = false;
    for (const std::string& n : verify_names())
        if (n == name) known = true;
    if (!known) throw NcError("unknown identity name: " + name);
    std::vector<Report> out;
    for (const Instance& in : registry())
        if (selected(in, name, opt)) out.push_back(run_instance(in, opt));
    return out;
}

std::vector<Report> run_suite(const VerifyOptions& opt, int jobs) {
    std::vector<const Instance*> todo;
    for (const Instance& in : registry())
        if (selected(in, in.name, opt)) todo.push_back(&in);
    std::vector<Report> out(todo.size());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= todo.size()) return;
            out[k] = run_instance(*todo[k], opt);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace qx
