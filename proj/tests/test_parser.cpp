#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qx/parser.hpp"
#include "qx/pfaffian.hpp"
#include "qx/sklyanin.hpp"

using namespace qx;

TEST_CASE("scalar expressions") {
    auto v = VarSet::base();
    CHECK(parse_scalar("q", v) == sc_q(v));
    CHECK(parse_scalar("q - q^-1", v) == sc_q_minus_qinv(v));
    CHECK(parse_scalar("3/2", v) == Scalar(v, 3) / Scalar(v, 2));
    CHECK(parse_scalar("(1 + q^2)*(1 + q^4)", v) ==
          q_factorial(2, sc_q(v, 4)) * (Scalar(v, 1) + sc_q(v, 2)));
    CHECK(parse_scalar("-q^2/(1 - q)", v) ==
          -sc_q(v, 2) / (Scalar(v, 1) - sc_q(v)));
    auto s = VarSet::spectral();
    CHECK(parse_scalar("l*m^-1", s) ==
          Scalar::variable(s, 1) / Scalar::variable(s, 2));
    CHECK_THROWS_AS(parse_scalar("z + 1", v), ParseError);
    CHECK_THROWS_AS(parse_scalar("q +", v), ParseError);
}

TEST_CASE("element grammar basics") {
    const Presentation* p = Presentation::make(PresKind::XO, 2);
    CHECK(parse_element("x[1,2]^2", p) == p->x_entry(1, 2) * p->x_entry(1, 2));
    CHECK(parse_element("x[2,1]", p) == p->x_entry(1, 2) * sc_q(p->vars(), -1));
    CHECK(parse_element("0", p) == p->zero());
    CHECK(parse_element("2*x[1,1] - x[2,2]", p) ==
          p->x_entry(1, 1) * Scalar(p->vars(), 2) - p->x_entry(2, 2));

    const Presentation* mat = Presentation::make(PresKind::MatN, 2);
    Element e = parse_element("(q - q^-1)*t[1,2]*t[2,1]", mat);
    CHECK(e == mat->t_entry(1, 2) * mat->t_entry(2, 1) * sc_q_minus_qinv(mat->vars()));
    CHECK(e.term_count() == 1);

    const Presentation* sp = Presentation::make(PresKind::XSp, 2);
    CHECK(parse_element("x[2,1]", sp) == -(sp->x_entry(1, 2) * sc_q(sp->vars())));
    CHECK(parse_element("x[1,1]", sp) == sp->zero());
}

TEST_CASE("element parse errors carry positions") {
    const Presentation* p = Presentation::make(PresKind::XO, 2);
    CHECK_THROWS_AS(parse_element("x[1,3]", p), ParseError);
    CHECK_THROWS_AS(parse_element("x[1]", p), ParseError);
    CHECK_THROWS_AS(parse_element("y[1]", p), ParseError);  // family/case mismatch
    CHECK_THROWS_AS(parse_element("x[1,2] +", p), ParseError);
    CHECK_THROWS_AS(parse_element("x[1,2] x[1,2]", p), ParseError);
    try {
        parse_element("x[1,2] @", p);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() == 8);
    }
}

TEST_CASE("round trip on engine-produced elements") {
    auto roundtrip = [](const Element& e, const Presentation* p) {
        std::string s = e.str();
        Element back = parse_element(s, p);
        CHECK(back == e);
        CHECK(back.str() == s);
    };
    {
        const Presentation* p = Presentation::make(PresKind::XO, 3);
        roundtrip(sdet(p), p);
        roundtrip(sklyanin_minor(p, {1, 2}, {2, 3}), p);
        roundtrip(sklyanin_comatrix(p)[0][2], p);
        roundtrip(p->zero(), p);
        roundtrip(p->one(), p);
    }
    {
        const Presentation* p = Presentation::make(PresKind::XSp, 4);
        roundtrip(pfaffian(p), p);
        roundtrip(sdet(p), p);
        roundtrip(pf_cofactor(p, 1, 3), p);
    }
    {
        const Presentation* p = Presentation::make(PresKind::MatN, 2);
        roundtrip(det_q(p), p);
        Element mixed = det_q(p) * sc_q_minus_qinv(p->vars()) +
                        p->t_entry(1, 1) * (Scalar(p->vars(), 1) / Scalar(p->vars(), 3));
        roundtrip(mixed, p);
    }
    {
        // tensor-square words (u/v families)
        const Presentation* p = Presentation::make(PresKind::MatTensorSquare, 2);
        Element e = coproduct(det_q(Presentation::make(PresKind::MatN, 2)));
        roundtrip(e, p);
    }
}
