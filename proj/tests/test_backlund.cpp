#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/backlund.hpp"
#include "pconf/errors.hpp"

#include <cmath>

using namespace pconf;

TEST_CASE("u_0 = 1 solves PIII with alpha = 4m, beta = -4m") {
    Rational m(1, 4);
    RationalFunction u0 = RationalFunction::constant(1);
    auto r = piii_residual(u0, PIIIParams::rational_family(0, m), cplx(0.7, 0.2));
    CHECK(std::abs(r.residual) <= 1e-14 * std::max(1.0, r.scale));
}

TEST_CASE("iterates solve PIII with the shifted parameters") {
    Rational m(1, 3);
    auto chain = rational_un_chain(5, m);
    REQUIRE(chain.size() == 6);
    for (int n = 0; n <= 5; ++n)
        for (cplx x : {cplx(0.9, 0.1), cplx(-1.3, 2.0), cplx(4.0, 0.0)}) {
            auto r = piii_residual(chain[n], PIIIParams::rational_family(n, m), x);
            CHECK(std::abs(r.residual) <= 1e-10 * r.scale);
        }
    CHECK(chain[1] == gromak_forward(chain[0], PIIIParams::rational_family(0, m)));
}

TEST_CASE("inverse map undoes the forward map") {
    Rational m(2, 7);
    auto chain = rational_un_chain(4, m);
    for (int n = 0; n < 4; ++n)
        CHECK(gromak_inverse(chain[n + 1], PIIIParams::rational_family(n, m)) == chain[n]);
}

TEST_CASE("Backlund iterate equals the Umemura ratio") {
    Rational m(1, 4);
    UmemuraSequence sm(m), smm1(m - 1);
    sm.extend(4);
    smm1.extend(4);
    for (int n = 1; n <= 4; ++n) CHECK(umemura_ratio(n, sm, smm1) == rational_un(n, m));
}

TEST_CASE("exact evaluator matches the rational function") {
    Rational m(1, 4);
    RationalSolutionEvaluator ev(m, 6);
    RationalFunction u6 = rational_un(6, m);
    Rational x(3, 11);
    CHECK(ev.eval(6, x) == u6.eval(x));
    cplx z(0.4, -0.3);
    CHECK(std::abs(ev.eval(6, z) - ratfun_eval(u6, z)) < 1e-12 * std::abs(ev.eval(6, z)));
}

TEST_CASE("poles have residue +-1/2 and zeros derivative +-2") {
    for (int n : {2, 3, 5}) {
        PoleZeroReport rep = classify_poles_zeros(rational_un(n, Rational(1, 5)));
        CHECK(!rep.poles.empty());
        CHECK(!rep.zeros.empty());
        CHECK(rep.maxClassificationError < 1e-6);
        for (const auto& p : rep.poles) CHECK(std::abs(std::abs(p.residueSign) - 0.5) == 0.0);
        for (const auto& z : rep.zeros) CHECK(std::abs(std::abs(z.derivativeSign) - 2.0) == 0.0);
    }
}

TEST_CASE("Hamiltonian large-x expansion") {
    Rational m(1, 4);
    const int n = 3;
    RationalFunction u = rational_un(n, m);
    HamiltonianPair hp = hamiltonian_hn(u, n, m);
    cplx x(1000.0, 0.0);
    cplx lhs = ratfun_eval(hp.H, x) + ratfun_eval(u, x) * ratfun_eval(hp.p, x) / x;
    CHECK(std::abs(lhs - tau_logderivative_expansion(x, n, 0.25)) < 1e-10);
}

TEST_CASE("origin limits are tan and -cot") {
    cplx m = 0.3;
    CHECK(std::abs(even_origin_limit(m) * odd_origin_limit(m) + 1.0) < 1e-14);
    Rational mq(3, 10);
    double u40 = to_double(un_zero_product(40, mq));
    CHECK(std::abs(u40 - even_origin_limit(m).real()) < 0.05);
}
