#pragma once

// Fredholm determinant D(r) = det(1 - lambda K_r) of the continuous Bessel
// kernel on [0, r], by a power series in r and by Nystrom quadrature; the
// sigma function sigma(r) = r d/dr ln D(r); and U(z;m) recovered from sigma'.

#include "pconf/exact.hpp"

#include <complex>
#include <vector>

namespace pconf {

enum class FredholmMethod { Auto, Series, Nystrom };

struct FredholmConfig {
    cplx lambda = 0.5;
    int quadOrder = 64;     // Gauss-Legendre nodes on [0, 1]
    int seriesOrder = 48;   // total degree in r
    double fdStep = 0.25;   // Nystrom derivatives: circle radius fdStep * max(1, |r|)
    int fdPoints = 24;      // points on that circle
    double seriesMaxR = 2;  // Auto picks the series for |r| <= seriesMaxR
    double seriesBudgetR = 8;
};

struct FredholmEval {
    cplx r;
    cplx det;
    cplx logDet;  // continuous branch from r = 0
    cplx sigma;
    cplx sigmaPrime;
    cplx sigmaSecond;
    FredholmMethod method;
    double errEst;
};

// K(x, y) = [sqrt(x) J1(sqrt x) J0(sqrt y) - J0(sqrt x) sqrt(y) J1(sqrt y)] / (2(x - y)),
// switching to the double power series when |x - y| <= 1.
cplx bessel_kernel(cplx x, cplx y);

// Nodes and weights of the n-point Gauss-Legendre rule on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

// tr K_r^l for l = 1..L by quadrature; throws QuadratureDivergence if halving
// the node count moves any trace by more than 1e-10 (relative).
std::vector<cplx> trace_powers(cplx r, int L, const FredholmConfig& cfg);

// T[l][d] = [r^d] tr((H W)^{2l}) with H_ij = 1/(i+j+1), W = diag((-r/4)^j/(j!)^2),
// so that ln D = -sum_l (lambda r/4)^l T[l][d] r^d / l. Valid for l + d <= N.
template <class T>
std::vector<std::vector<T>> trace_table(int N);

// Coefficients L_k of r^k in ln D (L_0 = 0), k <= N.
std::vector<cplx> logdet_series_coeffs(cplx lambda, int N);
// Same, exactly, as polynomials in lambda.
std::vector<RationalPoly> logdet_series_coeffs_symbolic(int N);

cplx logdet_series(cplx r, const FredholmConfig& cfg);
// Unwrapped along the segment [0, r].
cplx logdet_nystrom(cplx r, const FredholmConfig& cfg);
// Single Nystrom determinant without the quadrature check.
cplx det_nystrom(cplx r, const FredholmConfig& cfg);

FredholmEval fredholm_eval(cplx r, const FredholmConfig& cfg, FredholmMethod method = FredholmMethod::Auto);
std::pair<cplx, cplx> sigma_and_prime(cplx r, const FredholmConfig& cfg, FredholmMethod method = FredholmMethod::Auto);
// (r sigma'')^2 - sigma' (4 sigma' + 1)(sigma - r sigma')
cplx sigma_form_residual(cplx r, const FredholmConfig& cfg, FredholmMethod method = FredholmMethod::Auto);

// Taylor coefficients s_1..s_K of sigma (index 0 holds s_0 = 0) from the
// sigma-form, on the branch s_2 = lambda(1 - lambda)/16. Throws DegenerateLambda for lambda in {0, 1}.
std::vector<cplx> sigma_series_coeffs(cplx lambda, int K);
std::vector<RationalPoly> sigma_series_coeffs_symbolic(int K);

// 1/(1 + e^{2 pi i m}); throws DegenerateLambda for m in Z + 1/2.
cplx lambda_of_m(cplx m);

// U(t z; m) at t = k/steps, k = 0..steps, from U - 1/U = -16i sigma'(32 i z) - 2i,
// tracking the root that starts at tan(pi(m+1/2)/2). Throws BranchTrackingFailure.
std::vector<cplx> u_path_from_fredholm(cplx z, cplx m, const FredholmConfig& cfg, int steps = 0);
cplx u_from_fredholm(cplx z, cplx m, const FredholmConfig& cfg);

// Taylor coefficients of U(z;m) through order K, derived from sigma_series_coeffs.
std::vector<cplx> u_series_from_sigma(cplx m, int K);

}  // namespace pconf
