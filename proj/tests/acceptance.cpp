// End-to-end acceptance harness: one pass/fail line per criterion.
// Runs the full verification surface at desk scale with exact arithmetic;
// exits nonzero when any criterion fails.

#include "qx/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

using namespace qx;

namespace {

int failures = 0;

void criterion(int no, const std::string& desc, const std::function<bool()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    char tag[32];
    std::snprintf(tag, sizeof(tag), "criterion-%02d", no);
    std::cout << (ok ? "PASS" : "FAIL") << " " << tag << ": " << desc << " ("
              << ms << " ms)";
    if (!err.empty()) std::cout << " [exception: " << err << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

bool verify_ok(const std::string& name, VerifyOptions opt = {}) {
    std::vector<Report> reports = run_verify(name, opt);
    if (reports.empty()) return false;
    for (const Report& r : reports)
        if (!r.holds) return false;
    return true;
}

bool associativity(PresKind kind, int N) {
    const Presentation* p = Presentation::make(kind, N);
    std::vector<Element> gens;
    for (const Gen& g : p->generators()) gens.push_back(p->gen_element(g));
    for (const Element& a : gens)
        for (const Element& b : gens) {
            Element ab = a * b;
            for (const Element& c : gens)
                if ((ab * c) != a * (b * c)) return false;
        }
    return true;
}

bool ext_relations(int N) {
    const Presentation* p = Presentation::make(PresKind::Ext, N);
    Scalar q = sc_q(p->vars());
    for (int i = 1; i <= N; ++i) {
        Element yi = p->y_entry(i);
        if (!(yi * yi).is_zero()) return false;
        for (int j = i + 1; j <= N; ++j) {
            Element yj = p->y_entry(j);
            if (yj * yi != -(yi * yj * q)) return false;
        }
    }
    return true;
}

bool antisymmetrizer_recursion() {
    auto v = VarSet::base();
    for (int N : {2, 3, 4}) {
        for (int m = 1; m + 1 <= 4; ++m) {
            std::vector<int> pos(m);
            for (int i = 0; i < m; ++i) pos[i] = i + 1;
            TensorOp am = antisymmetrizer(N, m, v).embed(m + 1, pos);
            Scalar den = sc_q(v, m + 1) - sc_q(v, -m - 1);
            TensorOp rh = op_Rhat(N, sc_q(v, -m)).embed(m + 1, {m, m + 1});
            TensorOp direct = antisymmetrizer(N, m + 1, v);
            if ((am * rh * am).scaled(Scalar(v, 1) / den) != direct) return false;
            if (direct * direct != direct) return false;
        }
    }
    return true;
}

bool phi_images_independent(Case c, int N) {
    auto vars = VarSet::base();
    const Presentation* p =
        Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N, vars);
    auto a = unit_params(vars, c == Case::O ? N : N / 2);
    std::vector<std::map<Word, Scalar>> pivots;
    std::vector<Word> pivot_words;
    for (const Word& w : basis_enumerate(p, 3)) {
        Element im = phi_embed(Element::from_terms(p, {{w, Scalar(vars, 1)}}, true),
                               c, a);
        std::map<Word, Scalar> vec = im.terms();
        for (size_t r = 0; r < pivots.size(); ++r) {
            auto it = vec.find(pivot_words[r]);
            if (it == vec.end()) continue;
            Scalar f = it->second / pivots[r].at(pivot_words[r]);
            for (const auto& [pw, pc] : pivots[r]) {
                Scalar upd = vec[pw] - f * pc;
                if (upd.is_zero())
                    vec.erase(pw);
                else
                    vec[pw] = upd;
            }
        }
        if (vec.empty()) return false;  // dependent image
        pivot_words.push_back(vec.begin()->first);
        pivots.push_back(std::move(vec));
    }
    return true;
}

// The comatrix diagonal realizes the principal quasideterminant ratios: each
// hat x_ii is the auxiliary minor over the complementary columns, scaled by
// the (-q)-shift of the column position.
bool comatrix_matches_aux_minors(Case c, int N) {
    const Presentation* p =
        Presentation::make(c == Case::O ? PresKind::XO : PresKind::XSp, N);
    auto C = sklyanin_comatrix(p);
    IndexSet full;
    for (int k = 1; k <= N; ++k) full.push_back(k);
    for (int i = 1; i <= N; ++i) {
        IndexSet cols;
        for (int k = 1; k <= N; ++k)
            if (k != i) cols.push_back(k);
        for (int j = 1; j <= N; ++j) {
            Element direct =
                aux_minor(p, full, cols, j) * sc_neg_q(p->vars(), i - N);
            if (C[i - 1][j - 1] != direct) return false;
        }
    }
    return true;
}

IdentityDescriptor perturbed(IdentityDescriptor d, VarSetPtr vars) {
    d.terms.front().coeff = d.terms.front().coeff * sc_q(vars);
    return d;
}

bool negative_controls() {
    using Kind = IdentityDescriptor::Kind;
    auto vars = VarSet::base();
    const Presentation* o3 = Presentation::make(PresKind::XO, 3, vars);
    const Presentation* sp4 = Presentation::make(PresKind::XSp, 4, vars);
    for (const IdentityDescriptor& d : seed_catalog(Kind::Sdet, 3))
        if (evaluate_identity(perturbed(d, vars), o3)) return false;
    for (const IdentityDescriptor& d : seed_catalog(Kind::Pf, 4))
        if (evaluate_identity(perturbed(d, vars), sp4)) return false;
    // the meta-transforms must not launder a broken identity into a valid one
    IdentityDescriptor bad_s = perturbed(seed_catalog(Kind::Sdet, 3).front(), vars);
    if (evaluate_identity(cayley_transform(bad_s, 3), o3)) return false;
    IdentityDescriptor bad_m = perturbed(seed_catalog(Kind::Sdet, 2).front(), vars);
    if (evaluate_identity(muir_law_transform(bad_m, {3}), o3)) return false;
    IdentityDescriptor bad_p = perturbed(seed_catalog(Kind::Pf, 2).front(), vars);
    if (evaluate_identity(muir_law_transform(bad_p, {3, 4}), sp4)) return false;
    return true;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(QX_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    criterion(1, "presentation soundness (associativity, defining relations, RTT, reflection)", [] {
        return associativity(PresKind::MatN, 2) && associativity(PresKind::MatN, 3) &&
               associativity(PresKind::XO, 2) && associativity(PresKind::XO, 3) &&
               associativity(PresKind::XSp, 2) && associativity(PresKind::XSp, 4) &&
               ext_relations(2) && ext_relations(4) && verify_ok("rtt") &&
               verify_ok("reflection");
    });
    criterion(2, "operator layer (YBE, braid, R-matrix inverses, antisymmetrizer recursion)", [] {
        return verify_ok("ybe") && verify_ok("braid") && verify_ok("basic-r") &&
               antisymmetrizer_recursion();
    });
    criterion(3, "embedding phi preserves relations; low-degree images independent", [] {
        return verify_ok("embedding") && phi_images_independent(Case::O, 3) &&
               phi_images_independent(Case::Sp, 4);
    });
    criterion(4, "sdet equals gamma times det_q squared under phi (symbolic a)", [] {
        return verify_ok("sdet-det2");
    });
    criterion(5, "explicit sdet formula matches the operator definition", [] {
        return verify_ok("sdet-explicit");
    });
    criterion(6, "comatrix orthogonality and auxiliary-minor entry formulas", [] {
        return verify_ok("comatrix") && comatrix_matches_aux_minors(Case::O, 2) &&
               comatrix_matches_aux_minors(Case::O, 3) &&
               comatrix_matches_aux_minors(Case::Sp, 2) &&
               comatrix_matches_aux_minors(Case::Sp, 4);
    });
    criterion(7, "Y-matrix relations and the omega involution", [] {
        return verify_ok("y-relations") && verify_ok("omega");
    });
    criterion(8, "Jacobi ratio theorem (sdet and Pfaffian kinds)", [] {
        return verify_ok("jacobi-sdet") && verify_ok("jacobi-pf");
    });
    criterion(9, "Cayley and Muir transforms preserve the seed catalog", [] {
        return verify_ok("cayley") && verify_ok("muir-law");
    });
    criterion(10, "alternating trace sums vanish (both operator orders)", [] {
        return verify_ok("muir-trace");
    });
    criterion(11, "Sylvester theorem (bordered-minor morphism and determinant identity)", [] {
        VerifyOptions sdet_opt;
        sdet_opt.max_n = 4;
        VerifyOptions pf_opt;
        pf_opt.max_n = 6;
        if (!verify_ok("sylvester-sdet", sdet_opt)) return false;
        if (!verify_ok("sylvester-pf", pf_opt)) return false;
        for (const Report& r : run_verify("sylvester-sdet", sdet_opt))
            if (r.notes.empty()) return false;  // arbitration note must surface
        return true;
    });
    criterion(12, "Pfaffian core (shuffle vs definition, Pluecker, orthogonality, Omega power, sdet = q^{3n} Pf^2, phi image)", [] {
        VerifyOptions big;
        big.max_n = 6;
        return verify_ok("pf-shuffle-vs-def", big) && verify_ok("plucker", big) &&
               verify_ok("pf-orthogonality") && verify_ok("omega-power") &&
               verify_ok("sdet-pf");
    });
    criterion(13, "Grassmann-Pluecker relation with the arbitrated exponent convention", [] {
        VerifyOptions big;
        big.max_n = 6;
        return verify_ok("gp", big) && grassmann_plucker_convention(1, 1) == 0 &&
               !grassmann_plucker_check(1, 1, 1);
    });
    criterion(14, "quasideterminant telescoping factorizations for every chain", [] {
        return verify_ok("quasidet-sdet") && verify_ok("quasidet-pf");
    });
    criterion(15, "centrality of sdet and Pf; powers independent", [] {
        return verify_ok("center-sdet") && verify_ok("center-pf");
    });
    criterion(16, "negative controls and CLI exit-code contract", [] {
        return negative_controls() && run_cli("verify basic-r") == 0 &&
               run_cli("verify no-such-identity") == 2 &&
               run_cli("suite --max-N 2") == 0;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 16 criteria passed\n";
    return 0;
}
