#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/errors.hpp"
#include "pconf/umemura.hpp"

using namespace pconf;

TEST_CASE("first polynomials") {
    Rational m(1, 4);
    UmemuraSequence seq(m);
    seq.extend(3);
    CHECK(seq.poly(-1) == RationalPoly::constant(1));
    CHECK(seq.poly(0) == RationalPoly::constant(1));
    // s_1 = (4x + 2m + 1)/2
    CHECK(seq.poly(1) == RationalPoly({(2 * m + 1) / 2, Rational(2)}));
    for (int n = 0; n <= 3; ++n) CHECK(seq.poly(n).degree() == n * (n + 1) / 2);
}

TEST_CASE("degrees and values at the origin") {
    for (Rational m : {Rational(1, 4), Rational(-2, 3), Rational(7, 5)}) {
        UmemuraSequence seq(m);
        seq.extend(9);
        for (int n = 0; n <= 9; ++n) {
            CHECK(seq.poly(n).degree() == n * (n + 1) / 2);
            CHECK(seq.at_zero(n) == phi_closed(n, m + Rational(1, 2)));
        }
    }
}

TEST_CASE("extend is incremental") {
    UmemuraSequence a(Rational(1, 3));
    a.extend(4);
    a.extend(7);
    UmemuraSequence b = umemura_extend(UmemuraSequence(Rational(1, 3)), 7);
    for (int n = 0; n <= 7; ++n) CHECK(a.poly(n) == b.poly(n));
}

TEST_CASE("Wronskian representation holds exactly") {
    for (Rational m : {Rational(1, 4), Rational(-1, 3)})
        for (Rational x : {Rational(0), Rational(3, 7), Rational(-5, 2)})
            for (int n = 0; n <= 6; ++n) CHECK(wronskian_2jk_check(n, x, m) == 0);
    CHECK(wronskian_2jk_check_float(6, 0.3, 0.25) < 1e-10);
}

TEST_CASE("Laguerre moments") {
    Rational x(2), m(1, 2);  // (1 + y/2) e^{2y}
    CHECK(laguerre_moment(0, x, m) == 1);
    CHECK(laguerre_moment(1, x, m) == Rational(5, 2));
    CHECK(laguerre_moment(2, x, m) == 3);  // 2 + 1
    CHECK(laguerre_moment(-1, x, m) == 0);
    CHECK(laguerre_det(0, x, m) == 1);
}

TEST_CASE("u_n(0) product against the Gamma form") {
    for (Rational m : {Rational(1, 4), Rational(1, 3), Rational(-2, 5)})
        for (int n = 0; n <= 12; ++n) {
            double exact = to_double(un_zero_product(n, m));
            cplx g = un_zero_gamma(n, to_double(m));
            CHECK(std::abs(g - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
        }
}

TEST_CASE("half-integer m is rejected at the origin") {
    // at m = 1/2 the even values hit a Gamma pole; odd values are 0
    CHECK_THROWS_AS(un_zero_product(4, Rational(1, 2)), HalfIntegerM);
    CHECK(un_zero_product(3, Rational(1, 2)) == 0);
}
