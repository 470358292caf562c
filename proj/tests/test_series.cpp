#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/errors.hpp"
#include "pconf/fredholm.hpp"
#include "pconf/series.hpp"

#include <cmath>

using namespace pconf;

TEST_CASE("exact and double recurrences agree") {
    auto ex = d8_series_exact(Rational(3, 2), 20);
    SeriesSolution s = d8_series(1.5, 20);
    for (int k = 0; k <= 20; ++k) {
        double e = to_double(ex[k]);
        CHECK(std::abs(s.coeffs[k] - e) <= 1e-12 * std::max(1.0, std::abs(e)));
    }
}

TEST_CASE("series satisfies the equation inside its disk") {
    SeriesSolution d8 = d8_series(cplx(0.8, 0.3), 60);
    SeriesSolution d6 = d6_series(cplx(0.8, 0.3), ScaledParams::d6(1.0, -1.0, 10.0), 60);
    for (const SeriesSolution* s : {&d8, &d6}) {
        cplx z = 0.3 * s->eval_radius() * cplx(0.6, 0.8);
        double scale = std::max(1.0, std::abs(s->eval(z)));
        CHECK(std::abs(series_residual(*s, z)) < 1e-10 * scale * scale * scale);
        CHECK(s->tail_estimate(z) < 1e-8);
    }
}

TEST_CASE("majorant bounds the series") {
    const double v0 = 1.0;
    SeriesSolution s = d8_series(v0, 40);
    double R = majorant_radius(2 * v0 + 1);
    CHECK(R > 0.0);
    CHECK(R <= s.empiricalRadius);
    auto W = majorant_sequence(2 * v0 + 1, 40, R);
    for (int k = 0; k <= 40; ++k) CHECK(std::abs(s.coeffs[k]) * std::pow(R, k) <= W[k] * (1 + 1e-12));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(d8_series(0.0), ZeroInitialValue);
    SeriesSolution s = d8_series(1.0, 30);
    CHECK_THROWS_AS(s.eval(2.0 * s.empiricalRadius), TruncationBudgetExceeded);
}

TEST_CASE("Maclaurin series matches the coefficients from sigma") {
    const double m = 0.25;
    const double pi = std::acos(-1.0);
    SeriesSolution s = d8_series(std::tan(pi * (m + 0.5) / 2), 8);
    auto fromSigma = u_series_from_sigma(m, 8);
    for (int k = 0; k <= 8; ++k)
        CHECK(std::abs(s.coeffs[k] - fromSigma[k]) <= 1e-10 * std::max(1.0, std::abs(s.coeffs[k])));
}

TEST_CASE("confluence gaps shrink with j") {
    Rational m(1, 4);
    GapPair g4 = confluence_gap(4, m, 0.1);
    GapPair g16 = confluence_gap(16, m, 0.1);
    CHECK(g16.even < g4.even);
    CHECK(g16.odd < g4.odd);
}
