#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qx/tensorops.hpp"

using namespace qx;

namespace {

MultiIdx mi(std::initializer_list<int> v) { return MultiIdx(v); }

TensorOp one_site(const Presentation* p, bool transpose, Family fam) {
    int N = p->n();
    TensorOp x(N, 1);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Element e = fam == Family::T ? p->t_entry(transpose ? j : i, transpose ? i : j)
                                         : p->x_entry(transpose ? j : i, transpose ? i : j);
            x.add_entry({i}, {j}, e);
        }
    return x;
}

}  // namespace

TEST_CASE("basic R entries and inverse") {
    auto v = VarSet::base();
    Scalar q = sc_q(v);
    TensorOp R = op_R(2, v);
    CHECK(R.entry(mi({1, 1}), mi({1, 1})) == scalar_entry(q));
    CHECK(R.entry(mi({1, 2}), mi({2, 1})) == scalar_entry(Scalar()));
    CHECK(R.entry(mi({2, 1}), mi({1, 2})) == scalar_entry(sc_q_minus_qinv(v)));
    CHECK(R * op_Rminus(2, v) == TensorOp::identity(2, 2, v));
    CHECK(op_Rplus(2, v) == op_P(2, v) * R * op_P(2, v));
}

TEST_CASE("Rhat example") {
    auto v = VarSet::base();
    Scalar q = sc_q(v);
    Scalar qi = sc_q(v, -1);
    SparseVec out = op_Rhat(2, qi).apply_basis(mi({1, 2}));
    CHECK(out[mi({1, 2})] == scalar_entry(Scalar(v, 1) - qi * qi));
    CHECK(out[mi({2, 1})] == scalar_entry(qi - q));
}

TEST_CASE("spectral YBE and braid form, N = 2, 3") {
    auto v = VarSet::spectral();
    Scalar l = Scalar::variable(v, v->index_of("l"));
    Scalar m = Scalar::variable(v, v->index_of("m"));
    for (int N : {2, 3}) {
        auto Rr = [&](const Scalar& s, int a, int b) {
            return op_Rlambda(N, s).embed(3, {a, b});
        };
        CHECK(Rr(l / m, 1, 2) * Rr(l, 1, 3) * Rr(m, 2, 3) ==
              Rr(m, 2, 3) * Rr(l, 1, 3) * Rr(l / m, 1, 2));
        auto Rh = [&](const Scalar& s, int a, int b) {
            return op_Rhat(N, s).embed(3, {a, b});
        };
        CHECK(Rh(l / m, 1, 2) * Rh(l, 2, 3) * Rh(m, 1, 2) ==
              Rh(m, 2, 3) * Rh(l, 1, 2) * Rh(l / m, 2, 3));
    }
}

TEST_CASE("variant YBE, both displayed forms") {
    auto v = VarSet::spectral();
    Scalar l = Scalar::variable(v, v->index_of("l"));
    for (int N : {2, 3}) {
        TensorOp rh12 = op_Rhat(N, l).embed(3, {1, 2});
        TensorOp rh23 = op_Rhat(N, l).embed(3, {2, 3});
        TensorOp r13 = op_Rt1(N, v).embed(3, {1, 3});
        TensorOp r23 = op_Rt1(N, v).embed(3, {2, 3});
        TensorOp r12 = op_Rt1(N, v).embed(3, {1, 2});
        CHECK(rh12 * r13 * r23 == r13 * r23 * rh12);
        CHECK(rh23 * r12 * r13 == r12 * r13 * rh23);
    }
}

TEST_CASE("antisymmetrizer formulas") {
    auto v = VarSet::base();
    Scalar q = sc_q(v);
    Scalar qi = sc_q(v, -1);
    SparseVec out = antisymmetrizer_tilde(2, 2, v).apply_basis(mi({1, 2}));
    CHECK(out[mi({1, 2})] == scalar_entry(Scalar(v, 1)));
    CHECK(out[mi({2, 1})] == scalar_entry(-q));
    for (int N : {2, 3}) {
        Scalar den = q * q - qi * qi;
        CHECK(antisymmetrizer(N, 2, v) ==
              op_Rhat(N, qi).scaled(Scalar(v, 1) / den));
        TensorOp a2 = antisymmetrizer(N, 2, v);
        CHECK(a2 * a2 == a2);
        if (N == 3) {
            TensorOp a3 = antisymmetrizer(N, 3, v);
            CHECK(a3 * a3 == a3);
        }
    }
    // recursion vs direct, m+1 <= 4, N <= 4
    for (int N : {2, 3, 4}) {
        for (int m = 1; m + 1 <= 4; ++m) {
            TensorOp am = antisymmetrizer(N, m, v).embed(m + 1, [&] {
                std::vector<int> pos(m);
                for (int i = 0; i < m; ++i) pos[i] = i + 1;
                return pos;
            }());
            Scalar den = sc_q(v, m + 1) - sc_q(v, -m - 1);
            TensorOp rh = op_Rhat(N, sc_q(v, -m)).embed(m + 1, {m, m + 1});
            CHECK((am * rh * am).scaled(Scalar(v, 1) / den) ==
                  antisymmetrizer(N, m + 1, v));
        }
    }
}

TEST_CASE("symmetrizer base case") {
    auto v = VarSet::base();
    Scalar q = sc_q(v);
    Scalar den = q * q - sc_q(v, -2);
    CHECK(symmetrizer(2, 2, v) == op_Rhat(2, q).scaled(Scalar(v, 1) / den));
    TensorOp s3 = symmetrizer(3, 3, v);
    CHECK(s3 * s3 == s3);
}

TEST_CASE("reflection operator identity with element entries") {
    auto vs = VarSet::spectral();
    Scalar l = Scalar::variable(vs, vs->index_of("l"));
    struct Cfg {
        PresKind kind;
        int N;
    };
    for (Cfg cfg : {Cfg{PresKind::XO, 2}, Cfg{PresKind::XO, 3}, Cfg{PresKind::XSp, 2},
                    Cfg{PresKind::XSp, 4}}) {
        auto p = Presentation::make(cfg.kind, cfg.N, vs);
        TensorOp x1 = one_site(p, false, Family::X).embed(2, {1});
        TensorOp x2 = one_site(p, false, Family::X).embed(2, {2});
        TensorOp rt = op_Rt1(cfg.N, vs);
        TensorOp rh = op_Rhat(cfg.N, l);
        CHECK(rh * x1 * rt * x2 == x1 * rt * x2 * rh);
    }
}

TEST_CASE("scalar reflection for J(a)") {
    {
        auto v = VarSet::with_params(3);
        std::vector<Scalar> a;
        for (int i = 1; i <= 3; ++i) a.push_back(Scalar::variable(v, i));
        TensorOp j1 = op_Ja(Case::O, 3, a).embed(2, {1});
        TensorOp j2 = op_Ja(Case::O, 3, a).embed(2, {2});
        TensorOp R = op_R(3, v), rt = op_Rt1(3, v);
        CHECK(R * j1 * rt * j2 == j2 * rt * j1 * R);
    }
    {
        auto v = VarSet::with_params(2);
        std::vector<Scalar> a = {Scalar::variable(v, 1), Scalar::variable(v, 2)};
        TensorOp j1 = op_Ja(Case::Sp, 4, a).embed(2, {1});
        TensorOp j2 = op_Ja(Case::Sp, 4, a).embed(2, {2});
        TensorOp R = op_R(4, v), rt = op_Rt1(4, v);
        CHECK(R * j1 * rt * j2 == j2 * rt * j1 * R);
    }
}

TEST_CASE("transpose identities over the matrix algebra") {
    for (int N : {2, 3}) {
        auto p = Presentation::make(PresKind::MatN, N);
        auto v = p->vars();
        TensorOp t1t = one_site(p, true, Family::T).embed(2, {1});
        TensorOp t2t = one_site(p, true, Family::T).embed(2, {2});
        TensorOp t1 = one_site(p, false, Family::T).embed(2, {1});
        TensorOp t2 = one_site(p, false, Family::T).embed(2, {2});
        TensorOp R = op_R(N, v), rt = op_Rt1(N, v);
        CHECK(t1t * rt * t2 == t2 * rt * t1t);
        CHECK(R * t1t * t2t == t2t * t1t * R);
        CHECK(t1 * rt * t2t == t2t * rt * t1);
    }
}

TEST_CASE("bracket") {
    auto p = Presentation::make(PresKind::XO, 2);
    auto v = p->vars();
    auto X = generator_matrix(p);
    Scalar q = sc_q(v);
    SparseVec out = apply_chain(bracket_chain(X, {1, 2}, v),
                                {{mi({1, 2}), scalar_entry(Scalar(v, 1))}});
    CHECK(out[mi({1, 1})] == p->x_entry(1, 1) * p->x_entry(1, 2) * q);
    CHECK(out[mi({1, 2})] == p->x_entry(1, 1) * p->x_entry(2, 2));
    CHECK(out[mi({2, 1})] == p->x_entry(2, 1) * p->x_entry(1, 2) * q);
    CHECK(out[mi({2, 2})] == p->x_entry(2, 1) * p->x_entry(2, 2));
    // m = 1 bracket is X itself
    TensorOp b1 = bracket(X, {1}, v);
    CHECK(b1.entry(mi({1}), mi({2})) == p->x_entry(1, 2));
}

TEST_CASE("antisymmetrizer commutes with the bracket") {
    for (int N : {2, 3}) {
        auto p = Presentation::make(PresKind::XO, N);
        auto v = p->vars();
        auto X = generator_matrix(p);
        for (int m : {2, 3}) {
            std::vector<int> order(m);
            for (int i = 0; i < m; ++i) order[i] = i + 1;
            TensorOp b = bracket(X, order, v);
            TensorOp a = antisymmetrizer_tilde(N, m, v);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("traces") {
    auto v = VarSet::base();
    CHECK(TensorOp::identity(2, 2, v).trace() == scalar_entry(Scalar(v, 4)));
    CHECK(op_P(2, v).trace() == scalar_entry(Scalar(v, 2)));
    auto p = Presentation::make(PresKind::XO, 2);
    TensorOp x = one_site(p, false, Family::X);
    CHECK(x.trace() == p->x_entry(1, 1) + p->x_entry(2, 2));
}
