#pragma once

// Closed-form large-n asymptotics: Umemura values at the origin, the scaled
// Umemura ratio in terms of U and the Bessel-kernel determinant, the (2j-k)
// determinants, the small-x leading terms of u_n, and convergence-trend fits.

#include "pconf/fredholm.hpp"
#include "pconf/monodromy.hpp"
#include "pconf/umemura.hpp"

#include <utility>
#include <vector>

namespace pconf {

struct TrendReport {
    std::vector<double> indices;
    std::vector<double> values;
    double rateEstimate = 0.0;  // p in values ~ C indices^{-p}
    bool pass = false;
};

// Least squares of log value on log index over the largest four indices;
// pass iff p >= minRate. Non-positive values fail the fit.
TrendReport fit_trend(const std::vector<double>& indices, const std::vector<double>& values, double minRate = 0.7);

// Logarithm of the Barnes-G formula for s_{2j}(0;m) (Even) or s_{2j-1}(0;m) (Odd).
// The imaginary part carries the sign of (-+cos pi m)^j. Throws BarnesZero.
cplx sn0_asymptotic_log(int j, cplx m, Parity parity);
// exp of the above; overflows to inf for large j, use the log form there.
cplx sn0_asymptotic(int j, cplx m, Parity parity);

// e^{2iz} (U(z;m)/U(0;m))^{-+1/4} sqrt(D_{lambda(m)}(32 i z)), minus sign for Even.
// The powers are continued from 1 at z = 0 along the segment [0, z].
cplx umemura_ratio_rhs(cplx z, cplx m, Parity parity, const FredholmConfig& cfg = {});
// Same, continued along the polyline 0 -> waypoints... -> z. Throws
// BranchTrackingFailure if |U| leaves [1e-6, 1e6] or an argument jumps.
cplx umemura_ratio_rhs_path(const std::vector<cplx>& waypoints, cplx z, cplx m, Parity parity,
                            const FredholmConfig& cfg = {});
// exp of the integral over [0, z] of y U'^2/(8U^2) -+ U'/(4U) - U + 1/U, with U from
// the D8 Maclaurin series; Gauss-Legendre with `nodes` points.
cplx umemura_ratio_quadrature(cplx z, cplx m, Parity parity, int nodes = 32);

// The exact ratio s_n(x;m)/s_n(0;m) at x = z/(n+1) with z Gaussian-rational.
cplx umemura_scaled_ratio(const UmemuraSequence& seq, int n, const Rational& zRe, const Rational& zIm);

// Leading small-x term of the solution with monodromy data d and parameters
// (alpha, beta): -G B^eps x^{4 eps mu - 1}. Requires 0 < |Re mu| < 1/2 and
// e0 = e^{i pi alpha/8}, eInf = i e^{-i pi beta/8}.
cplx generic_leading(cplx x, const MonodromyData& d, cplx alpha, cplx beta);
cplx generic_leading(cplx x, const MonodromyData& d);
// The same for u_n: the generic leading term at the Schlesinger-updated data and (alpha + 4n, beta + 4n).
cplx un_leading(cplx x, const MonodromyData& d, int n);
// -Gamma(1-2 eps mu)^2 / (Gamma(2 eps mu)^2 2^{4 eps mu - 1}) z^{4 eps mu - 1}
//   (e0^2 e2^2 eInf^2 (eInf^2 - e1^2)/(e0^2 e1^2 - 1))^eps
cplx d8_leading(cplx z, const MonodromyData& d);

// Closed form of D_n(x) = det(w_{2j-k}), w_k = 2^{m+1/2} c_k, at n = 2j, x = z/(2j+1)
// (Even) or n = 2j-1, x = z/(2j) (Odd). The U/D factor is umemura_ratio_rhs.
cplx dets_2jk_asymptotic(int j, cplx z, cplx m, Parity parity, const FredholmConfig& cfg = {});
cplx dets_2jk_prefactor(int j, cplx m, Parity parity);
// D_n(x) from the moment determinant; real rational x and m.
double dets_2jk_exact(int n, const Rational& x, const Rational& m);

// (u_{2k+2}(0)/u_{2k}(0), u_{2k+1}(0)/u_{2k-1}(0)) from the leading-term
// formula; the odd ratio needs k >= 1.
std::pair<cplx, cplx> un0_ratio_recursion(int k, const MonodromyData& d);
// Exact version for rational thetas and mu with 0 < |mu| < 1/2.
std::pair<Rational, Rational> un0_ratio_recursion(int k, const Rational& theta0, const Rational& thetaInf,
                                                  const Rational& mu);

// log|q| without overflow.
double log_abs(const Rational& q);

}  // namespace pconf
