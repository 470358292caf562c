#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/asymptotics.hpp"
#include "pconf/errors.hpp"

#include <cmath>

using namespace pconf;

TEST_CASE("trend fit recovers a power law") {
    std::vector<double> n{2, 4, 8, 16, 32}, v;
    for (double x : n) v.push_back(3.0 / x);
    TrendReport t = fit_trend(n, v);
    CHECK(t.rateEstimate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.pass);
    std::vector<double> flat(n.size(), 1.0);
    CHECK_FALSE(fit_trend(n, flat).pass);
    v[4] = 0.0;
    CHECK_FALSE(fit_trend(n, v).pass);
}

TEST_CASE("values at the origin follow the Barnes-G form") {
    // s_n(0) = phi_n(m + 1/2); relative error decreases with j
    const Rational m(1, 4);
    double prev = 1e300;
    for (int j : {4, 8, 16}) {
        const Rational exact = phi_closed(2 * j, m + Rational(1, 2));
        cplx lg = sn0_asymptotic_log(j, 0.25, Parity::Even);
        double err = std::abs(lg.real() - log_abs(exact));
        CHECK(err < prev);
        prev = err;
        // sign (-1)^j
        CHECK((exact < 0) == (j % 2 == 1));
        CHECK(std::cos(lg.imag()) * (exact < 0 ? -1.0 : 1.0) > 0.99);
    }
    CHECK(prev < 0.01);
}

TEST_CASE("ratio factor equals 1 at the origin and is path independent") {
    for (Parity p : {Parity::Even, Parity::Odd}) {
        CHECK(std::abs(umemura_ratio_rhs(0.0, 0.25, p) - 1.0) < 1e-14);
        cplx z(0.06, 0.03);
        cplx direct = umemura_ratio_rhs(z, 0.25, p);
        cplx bent = umemura_ratio_rhs_path({cplx(0.05, -0.02)}, z, 0.25, p);
        CHECK(std::abs(direct - bent) < 1e-9 * std::abs(direct));
        CHECK(std::abs(direct - umemura_ratio_quadrature(z, 0.25, p)) < 1e-8 * std::abs(direct));
    }
}

TEST_CASE("scaled Umemura ratio approaches the limit") {
    UmemuraSequence seq(Rational(1, 4));
    seq.extend(32);
    cplx lim = umemura_ratio_rhs(0.1, 0.25, Parity::Even);
    double e8 = std::abs(umemura_scaled_ratio(seq, 8, Rational(1, 10), 0) - lim);
    double e32 = std::abs(umemura_scaled_ratio(seq, 32, Rational(1, 10), 0) - lim);
    CHECK(e32 < e8);
}

TEST_CASE("leading small-x terms") {
    MonodromyData d = MonodromyData::from_thetas(cplx(0.3, 0.1), cplx(0.7, -0.2), cplx(0.21, 0.05), cplx(0.4, 0.3));
    cplx z(0.01, 0.002);
    cplx scale = d8_leading(2.0 * z, d) / d8_leading(z, d);
    CHECK(std::abs(scale - std::pow(cplx(2.0), 4.0 * d.mu - 1.0)) < 1e-12 * std::abs(scale));
    CHECK(std::abs(generic_leading(z, d) - generic_leading(z, d, d.alpha(), d.beta())) < 1e-14 * std::abs(generic_leading(z, d)));
    CHECK_THROWS_AS(generic_leading(z, d, d.alpha() + 1.0, d.beta()), std::invalid_argument);
    MonodromyData edge = MonodromyData::from_thetas(0.3, 0.7, cplx(0.0, 0.2), 0.1);
    CHECK_THROWS_AS(generic_leading(z, edge), ExcludedReMu);
}

TEST_CASE("rational family: leading term reproduces u_n(0)") {
    MonodromyData d = rational_family_data(0.25);
    for (int n = 0; n <= 4; ++n) {
        cplx lead = un_leading(1e-3, d, n);
        cplx g = un_zero_gamma(n, 0.25);
        // exponent 4 eps mu - 1 = 0 for mu = 1/4: the leading term is constant
        CHECK(std::abs(lead - g) < 1e-12 * std::abs(g));
    }
}

TEST_CASE("exact ratio recursion") {
    for (Rational m : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
        const Rational th0 = m, thInf = m + 1, mu(1, 4);
        for (int k = 0; k <= 4; ++k) {
            auto [even, odd] = un0_ratio_recursion(k, th0, thInf, mu);
            CHECK(even == un_zero_product(2 * k + 2, m) / un_zero_product(2 * k, m));
            if (k >= 1) CHECK(odd == un_zero_product(2 * k + 1, m) / un_zero_product(2 * k - 1, m));
        }
        // telescoping from u_0(0) = 1
        Rational prod = 1;
        for (int k = 0; k < 5; ++k) prod *= un0_ratio_recursion(k, th0, thInf, mu).first;
        CHECK(prod == un_zero_product(10, m));
    }
    CHECK_THROWS_AS(un0_ratio_recursion(1, Rational(1, 4), Rational(5, 4), Rational(1, 2)), ExcludedReMu);
    auto fl = un0_ratio_recursion(2, rational_family_data(0.25));
    CHECK(std::abs(fl.first - to_double(un_zero_product(6, Rational(1, 4)) / un_zero_product(4, Rational(1, 4)))) < 1e-12);
    CHECK(std::isnan(un0_ratio_recursion(0, rational_family_data(0.25)).second.real()));
}

TEST_CASE("moment determinants approach the closed form") {
    const Rational m(1, 4);
    double prev = 1e300;
    for (int j : {2, 4, 8}) {
        const int n = 2 * j;
        double exact = dets_2jk_exact(n, Rational(1, 10) / (n + 1), m);
        cplx asym = dets_2jk_asymptotic(j, 0.1, 0.25, Parity::Even);
        double err = std::abs(std::log(std::abs(exact)) - std::log(std::abs(asym)));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("log_abs survives huge rationals") {
    Rational big = 1;
    for (int i = 0; i < 2000; ++i) big *= 10;
    CHECK(log_abs(big / 3) == doctest::Approx(2000 * std::log(10.0) - std::log(3.0)));
}
