#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/errors.hpp"
#include "pconf/exact.hpp"
#include "pconf/intpoly.hpp"

using namespace pconf;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("1/4") == Rational(1, 4));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("integer polynomial products agree across algorithms") {
    IntPoly p, q;
    for (int i = 0; i < 300; ++i) p.push_back(Integer(i * 7919 % 1001) - 500);
    for (int i = 0; i < 250; ++i) q.push_back(Integer(i * 104729 % 2003) - 1000);
    p.back() = 1;
    q.back() = 3;
    IntPoly fast = zmul(p, q);
    CHECK(fast == zmul_schoolbook(p, q));
    CHECK(zdiv_exact(fast, q) == p);
    CHECK(zdiv_exact_schoolbook(fast, p) == q);
    CHECK(zsqr(p) == zmul_schoolbook(p, p));
}

TEST_CASE("inexact integer division throws") {
    IntPoly m{Integer(1), Integer(0), Integer(1)};  // x^2 + 1
    IntPoly d{Integer(1), Integer(1)};              // x + 1
    CHECK_THROWS_AS(zdiv_exact(m, d), NonDivisible);
}

TEST_CASE("content, primitive part and gcd") {
    IntPoly a{Integer(-6), Integer(0), Integer(-12)};
    Integer c;
    IntPoly prim = zprimitive(a, &c);
    CHECK(c == -6);
    CHECK(prim == IntPoly{Integer(1), Integer(0), Integer(2)});
    IntPoly f{Integer(-1), Integer(1)};                // x - 1
    IntPoly g{Integer(2), Integer(1)};                 // x + 2
    IntPoly h{Integer(3), Integer(0), Integer(1)};     // x^2 + 3
    CHECK(zgcd(zmul(f, h), zmul(g, h)) == h);
    CHECK(zgcd(zscale(f, 4), zscale(g, 6)) == IntPoly{Integer(1)});
}

TEST_CASE("rational polynomial arithmetic") {
    RationalPoly x = RationalPoly::monomial(1, 1);
    RationalPoly p = x * x - RationalPoly::constant(1);
    RationalPoly q = x - RationalPoly::constant(1);
    CHECK(poly_div_exact(p, q) == x + RationalPoly::constant(1));
    auto [quo, rem] = poly_divmod(p + RationalPoly::constant(3), q);
    CHECK(quo == x + RationalPoly::constant(1));
    CHECK(rem == RationalPoly::constant(3));
    CHECK(poly_derivative(p) == RationalPoly::constant(2) * x);
    CHECK(poly_gcd(p, q) == q);
    CHECK(p.eval(Rational(1, 2)) == Rational(-3, 4));
    auto [re, im] = p.eval(Rational(0), Rational(1));  // i^2 - 1
    CHECK(re == -2);
    CHECK(im == 0);
}

TEST_CASE("scaled form round trips") {
    RationalPoly p({Rational(1, 3), Rational(-2, 5), Rational(7, 15)});
    ScaledPoly s = to_scaled(p);
    CHECK(from_scaled(s) == p);
    CHECK(s.prim.back() > 0);
    CHECK(eval_scaled(s, Rational(3, 2)) == p.eval(Rational(3, 2)));
}

TEST_CASE("rational functions reduce to lowest terms") {
    RationalFunction x = RationalFunction::x();
    RationalFunction one = RationalFunction::constant(1);
    RationalFunction f = (x * x - one) / (x - one);
    CHECK(f.den().degree() == 0);
    CHECK(f == x + one);
    RationalFunction g = one / x;
    CHECK(g.derivative() == -(one / (x * x)));
    CHECK_THROWS_AS(g.eval(Rational(0)), PoleHit);
    CHECK_THROWS_AS(RationalFunction(x.num(), RationalPoly()), DegenerateDenominator);
    CHECK(std::abs(ratfun_eval(g, cplx(0, 2)) - cplx(0, -0.5)) < 1e-15);
    CHECK_THROWS_AS(ratfun_eval(g, cplx(0, 0)), PoleHit);
}

TEST_CASE("normalized float view") {
    RationalPoly p({Rational(4), Rational(2), Rational(1)});
    NormalizedPoly n = poly_normalized_float(p);
    CHECK(n.scale == 4);
    CHECK(n.coeffs[1] == doctest::Approx(0.5));
    CHECK(std::abs(n.eval(cplx(1, 0)) * to_double(n.scale) - 7.0) < 1e-14);
}
