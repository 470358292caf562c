#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/errors.hpp"
#include "pconf/monodromy.hpp"

#include <cmath>

using namespace pconf;

static MonodromyData sample() { return MonodromyData::from_thetas(cplx(0.3, 0.1), cplx(0.7, -0.2), cplx(0.21, 0.05), cplx(0.4, 0.3)); }

TEST_CASE("parameter conversions") {
    MonodromyData d = MonodromyData::from_alpha_beta(1.2, 0.8, 0.2, 0.1);
    CHECK(std::abs(d.theta0 - 0.3) < 1e-15);
    CHECK(std::abs(d.thetaInf - 0.8) < 1e-15);
    CHECK(std::abs(d.alpha() - 1.2) < 1e-15);
    CHECK(std::abs(d.beta() - 0.8) < 1e-15);
    MonodromyData e = MonodromyData::from_exponentials(d.e0, d.eInf, d.e1, d.e2);
    CHECK(std::abs(e.mu - d.mu) < 1e-14);
    CHECK(d.epsilon() == 1);
    CHECK(MonodromyData::from_thetas(0.3, 0.7, -0.2, 0.1).epsilon() == -1);
}

TEST_CASE("genericity") {
    CHECK(is_generic(sample()));
    CHECK_THROWS_AS(MonodromyData::from_thetas(0.3, 0.7, 0.5, 0.1), NonGeneric);   // e1^4 = 1
    CHECK_THROWS_AS(MonodromyData::from_thetas(0.4, 0.7, 0.2, 0.1), NonGeneric);   // e1^2 = e0^2
    CHECK_THROWS_AS(MonodromyData::from_thetas(0.3, 0.6, -0.3, 0.1), NonGeneric);  // e1^2 = eInf^-2
}

TEST_CASE("Stokes, eigenvector and connection identities") {
    MonodromyData d = sample();
    for (double r : stokes_trace_residuals(d)) CHECK(r < 1e-12);
    for (double r : eigen_residuals(d)) CHECK(r < 1e-12);
    for (double r : cyclic_residuals(d)) CHECK(r < 1e-12);
    CHECK(cplus_agreement(d) < 1e-12);
    EigenvectorMatrices E = eigenvector_matrices(d);
    CHECK(std::abs(E.Einf.determinant() - 1.0) < 1e-12);
    CHECK(std::abs(E.E0.determinant() - 1.0) < 1e-12);
    ConnectionMatrices C = connection_matrices(d);
    CHECK(std::abs(C.Cminus.determinant() - 1.0) < 1e-12);
}

TEST_CASE("e2 -> -e2 flips the sign of the connection matrix") {
    MonodromyData d = sample();
    MonodromyData f = MonodromyData::from_exponentials(d.e0, d.eInf, d.e1, -d.e2);
    Matrix2 a = connection_matrices(d).Cminus, b = connection_matrices(f).Cminus;
    CHECK((a + b).norm() < 1e-12 * a.norm());
}

TEST_CASE("points lie on the cubics") {
    MonodromyData d = sample();
    CubicPoint x = x_coords(d);
    CHECK(x.kind == CubicKind::D6);
    CHECK(x.residual < 1e-12);
    CubicPoint y = y_coords(d);
    CHECK(y.kind == CubicKind::D8);
    CHECK(y.residual < 1e-12);
    CubicPoint yn = y_coords(d, -1);
    CHECK(yn.residual < 1e-12);
    CHECK(std::abs(yn.coords[0] + y.coords[0]) < 1e-12 * std::abs(y.coords[0]));
    CHECK(std::abs(d8_point({0.0, 0.0, 5.0}).residual - 1.0) < 1e-15);
}

TEST_CASE("Schlesinger update") {
    MonodromyData d = sample();
    MonodromyData d2 = schlesinger_update(d, 2);
    CHECK(std::abs(d2.theta0 - (d.theta0 + 2.0)) < 1e-15);
    CHECK(std::abs(d2.thetaInf - (d.thetaInf - 2.0)) < 1e-15);
    CHECK(std::abs(d2.mu - d.mu) < 1e-15);
    CHECK(std::abs(d2.e2 - d.e2) < 1e-15);
    CHECK(std::abs(d2.e0 + d.e0) < 1e-14);  // e^{i pi}
    MonodromyData d1 = schlesinger_update(d, 1);
    CHECK(std::abs(d1.mu - (d.mu - 0.5)) < 1e-15);
    // the x-point is preserved by the update
    CubicPoint x0 = x_coords(d), x2 = x_coords(d2);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x0.coords[i] - x2.coords[i]) < 1e-10 * (1 + std::abs(x0.coords[i])));
}

TEST_CASE("partner data shares the x-point") {
    MonodromyData d = sample();
    MonodromyData p = inverted_e1_partner(d);
    CHECK(std::abs(p.e1 * d.e1 - 1.0) < 1e-14);
    CubicPoint a = x_coords(d), b = x_coords(p);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a.coords[i] - b.coords[i]) < 1e-10 * (1 + std::abs(a.coords[i])));
}

TEST_CASE("singular points of the D6 cubic") {
    // e0^2 = eInf^2 gives (-1, 0, e0^2 + e0^-2)
    cplx e0 = std::exp(cplx(0, 0.4)), eInf = e0;
    auto s = singular_points(e0, eInf);
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s[0].coords[0] + 1.0) < 1e-15);
    CHECK(std::abs(s[0].coords[2] - (e0 * e0 + 1.0 / (e0 * e0))) < 1e-15);
    CHECK(s[0].residual < 1e-14);
    CHECK(d6_gradient_norm(s[0].coords, e0, eInf) < 1e-14);
    // e0^-2 = eInf^2
    auto s2 = singular_points(e0, 1.0 / e0);
    REQUIRE(s2.size() == 1);
    CHECK(d6_gradient_norm(s2[0].coords, e0, 1.0 / e0) < 1e-14);
    CHECK(singular_points(sample()).empty());
}

TEST_CASE("limiting D8 data") {
    MonodromyData d = sample();
    for (Parity par : {Parity::Even, Parity::Odd}) {
        LimitingD8Data L = limiting_d8_data(d, par);
        CHECK(std::abs(L.C.determinant() - 1.0) < 1e-10);
        MonodromyData dn = schlesinger_update(d, par == Parity::Odd ? 1 : 0);
        CHECK(std::abs(L.mu - dn.mu) < 1e-15);
        CHECK(std::abs(L.t + dn.e1 * dn.e1 + 1.0 / (dn.e1 * dn.e1)) < 1e-14);
    }
}

TEST_CASE("rational family data") {
    MonodromyData d = rational_family_data(0.25);
    CHECK(std::abs(d.mu - 0.25) < 1e-15);
    CHECK(std::abs(d.thetaInf - d.theta0 - 1.0) < 1e-15);
    CHECK(std::abs(limiting_d8_data(d, Parity::Even).t) < 1e-14);
    for (double r : cyclic_residuals(d)) CHECK(r < 1e-12);
}
