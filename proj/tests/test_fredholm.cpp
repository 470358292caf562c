#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/errors.hpp"
#include "pconf/fredholm.hpp"

#include <cmath>

using namespace pconf;

TEST_CASE("Gauss-Legendre on [0,1] integrates polynomials") {
    std::vector<double> x, w;
    gauss_legendre_01(10, x, w);
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 19);
    CHECK(s == doctest::Approx(1.0 / 20).epsilon(1e-14));
}

TEST_CASE("kernel diagonal and symmetry") {
    CHECK(std::abs(bessel_kernel(0.0, 0.0) - 0.25) < 1e-15);
    cplx a(1.3, 0.2), b(2.9, -0.4);
    CHECK(std::abs(bessel_kernel(a, b) - bessel_kernel(b, a)) < 1e-15);
    // the near-diagonal series and the closed form meet continuously
    cplx x = 5.0;
    CHECK(std::abs(bessel_kernel(x, x + 1.0 + 1e-9) - bessel_kernel(x, x + 1.0 - 1e-9)) < 1e-9);
}

TEST_CASE("first log-determinant coefficient") {
    auto L = logdet_series_coeffs(0.5, 6);
    CHECK(std::abs(L[0]) == 0.0);
    CHECK(std::abs(L[1] + 0.5 / 4) < 1e-15);
    auto sym = logdet_series_coeffs_symbolic(6);
    for (int k = 1; k <= 6; ++k) {
        auto [re, im] = sym[k].eval(Rational(1, 2), Rational(0));
        CHECK(im == 0);
        CHECK(std::abs(L[k] - to_double(re)) <= 1e-14 * std::abs(L[k]) + 1e-17);  // odd k vanish at lambda = 1/2
    }
}

TEST_CASE("lambda = 1 gives D = exp(-r/4)") {
    FredholmConfig cfg;
    cfg.lambda = 1.0;
    for (double r : {0.5, 2.0, 6.0}) {
        FredholmEval e = fredholm_eval(r, cfg, FredholmMethod::Nystrom);
        CHECK(std::abs(e.logDet + r / 4) < 1e-11);
    }
    CHECK(std::abs(logdet_series(1.0, cfg) + 0.25) < 1e-13);
}

TEST_CASE("series and Nystrom agree") {
    FredholmConfig cfg;
    cfg.lambda = cplx(0.3, 0.4);
    for (cplx r : {cplx(0.5, 0), cplx(1.5, 1.0), cplx(0, 3.0)})
        CHECK(std::abs(logdet_series(r, cfg) - logdet_nystrom(r, cfg)) < 1e-10);
}

TEST_CASE("trace of the kernel") {
    FredholmConfig cfg;
    auto t = trace_powers(0.5, 3, cfg);
    // tr K_r = r/4 - r^2/32 + O(r^3)
    CHECK(std::abs(t[0] - (0.125 - 0.25 / 32)) < 1e-3);
    CHECK(std::abs(t[1]) < std::abs(t[0]));
}

TEST_CASE("sigma form and its Taylor series") {
    FredholmConfig cfg;
    cfg.lambda = 0.3;
    for (cplx r : {cplx(0.7, 0), cplx(3.0, 1.0)}) {
        CHECK(std::abs(sigma_form_residual(r, cfg, FredholmMethod::Nystrom)) < 1e-8);
    }
    auto s = sigma_series_coeffs(0.3, 10);
    CHECK(std::abs(s[0]) == 0.0);
    CHECK(std::abs(s[1] + 0.3 / 4) < 1e-15);
    CHECK(std::abs(s[2] - 0.3 * 0.7 / 16) < 1e-15);
    auto sym = sigma_series_coeffs_symbolic(10);
    auto [re, im] = sym[7].eval(Rational(3, 10), Rational(0));
    CHECK(std::abs(s[7] - to_double(re)) < 1e-15 * std::max(1.0, std::abs(s[7])) + 1e-25);
    CHECK_THROWS_AS(sigma_series_coeffs(0.0, 4), DegenerateLambda);
    CHECK_THROWS_AS(sigma_series_coeffs(1.0, 4), DegenerateLambda);
}

TEST_CASE("lambda(m) and U from sigma") {
    CHECK(std::abs(lambda_of_m(0.0) - 0.5) < 1e-15);
    CHECK_THROWS_AS(lambda_of_m(0.5), DegenerateLambda);
    const double pi = std::acos(-1.0);
    FredholmConfig cfg;
    cplx u0 = u_from_fredholm(0.0, 0.25, cfg);
    CHECK(std::abs(u0 - std::tan(pi * 0.75 / 2)) < 1e-12);
    auto c = u_series_from_sigma(0.25, 30);
    cplx z(0.05, 0.02), sum = 0, zk = 1;
    for (int k = 0; k <= 30; ++k, zk *= z) sum += c[k] * zk;
    CHECK(std::abs(u_from_fredholm(z, 0.25, cfg) - sum) < 1e-8);
}
