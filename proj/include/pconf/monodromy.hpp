#pragma once

// Monodromy parameter algebra of the PIII(D6) Lax pair: Stokes multipliers,
// eigenvector and connection matrices, the D6 and D8 cubic surfaces, the
// Schlesinger parity map and the data of the rational family.

#include "pconf/exact.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace pconf {

using Matrix2 = Eigen::Matrix2cd;

// Tolerance on each excluded equality of the genericity condition.
inline constexpr double kGenericityTol = 1e-12;

struct MonodromyData {
    cplx theta0, thetaInf, mu, eta;
    // e0 = e^{i pi theta0/2}, eInf = e^{i pi thetaInf/2}, e1 = e^{i pi mu}, e2 = e^{i pi eta}
    cplx e0, eInf, e1, e2;

    // theta0 = alpha/4, thetaInf = 1 - beta/4. Throws NonGeneric.
    static MonodromyData from_thetas(cplx theta0, cplx thetaInf, cplx mu, cplx eta);
    static MonodromyData from_alpha_beta(cplx alpha, cplx beta, cplx mu, cplx eta);
    // Exponents recovered with principal logarithms; the exponentials are kept as given.
    static MonodromyData from_exponentials(cplx e0, cplx eInf, cplx e1, cplx e2);

    cplx alpha() const { return 4.0 * theta0; }
    cplx beta() const { return 4.0 * (1.0 - thetaInf); }
    // sgn Re mu, with -1 on Re mu = 0.
    int epsilon() const { return mu.real() > 0 ? 1 : -1; }
};

// Throws NonGeneric if e1^4 = 1, e1 e2 = 0 or e1^2 in {eInf^{+-2}, e0^{+-2}}.
void check_generic(const MonodromyData& d);
bool is_generic(const MonodromyData& d);

struct StokesMultipliers {
    cplx s1Inf, s2Inf, s10, s20;
};
StokesMultipliers stokes_multipliers(const MonodromyData& d);
// |e1^2 + e1^-2 - (trace from the Stokes product)| on the infinity and zero side.
std::array<double, 2> stokes_trace_residuals(const MonodromyData& d);

struct EigenvectorMatrices {
    Matrix2 Einf, E0;
};
EigenvectorMatrices eigenvector_matrices(const MonodromyData& d);
// ||S1^{-1} e^{-+2 sigma3} S2^{-1} E - E e1^{2 sigma3}|| on both sides, divided by the
// product of the factor norms (infinity norm); this is the scale of rounding error.
std::array<double, 2> eigen_residuals(const MonodromyData& d);

struct ConnectionMatrices {
    Matrix2 Cminus, Cplus;
    Matrix2 CplusAlt;  // S1(s1Inf) Cminus S1(s10)^{-1}; equal to Cplus
};
// ||Cplus - CplusAlt|| relative to the factor norms of CplusAlt.
double cplus_agreement(const MonodromyData& d);
ConnectionMatrices connection_matrices(const MonodromyData& d);
// Deviations of both cyclic products from the identity, scaled as above.
std::array<double, 2> cyclic_residuals(const MonodromyData& d);

enum class CubicKind { D6, D8 };

struct CubicPoint {
    CubicKind kind;
    std::array<cplx, 3> coords;
    // |cubic(coords)| divided by the largest monomial magnitude.
    double residual;
};

// Evaluates x1 x2 x3 + x1^2 + x2^2 + x2(e0^-2 + eInf^2) + x1(1 + e0^-2 eInf^2) + e0^-2 eInf^2.
CubicPoint d6_point(const std::array<cplx, 3>& x, cplx e0, cplx eInf);
// Evaluates y1 y2 y3 + y1^2 + y2^2 + 1.
CubicPoint d8_point(const std::array<cplx, 3>& y);

CubicPoint x_coords(const MonodromyData& d);
// rootChoice = +-1 multiplies the principal square root shared by y1 and y2.
CubicPoint y_coords(const MonodromyData& d, int rootChoice = 1);

// Data of the n-th Backlund iterate: theta0 + n, thetaInf - n, mu_n, e2 unchanged.
MonodromyData schlesinger_update(const MonodromyData& d, int n);

// e1 -> 1/e1 with the matching e2 (principal root); x is invariant, y up to sign.
MonodromyData inverted_e1_partner(const MonodromyData& d);

// Singular points of the D6 cubic: (0, -e0^-2, e0^2 + e0^-2) when e0^-2 = eInf^2,
// (-1, 0, e0^2 + e0^-2) when e0^2 = eInf^2. Empty for a smooth surface.
std::vector<CubicPoint> singular_points(cplx e0, cplx eInf, double tol = kGenericityTol);
std::vector<CubicPoint> singular_points(const MonodromyData& d);
// Euclidean norm of the gradient of the D6 cubic.
double d6_gradient_norm(const std::array<cplx, 3>& x, cplx e0, cplx eInf);

enum class Parity { Even, Odd };

struct LimitingD8Data {
    cplx t;     // -(e1n^2 + e1n^-2), shared by both Stokes matrices
    Matrix2 C;  // connection matrix of the limiting D8 problem
    cplx mu;    // mu_n for this parity
};
LimitingD8Data limiting_d8_data(const MonodromyData& d, Parity parity, int rootChoice = 1);

// theta0 = m, thetaInf = m + 1, mu = 1/4 and the e2 of the rational solutions u_n(x;m).
MonodromyData rational_family_data(cplx m);

}  // namespace pconf
