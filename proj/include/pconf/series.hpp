#pragma once

// Maclaurin solutions of the scaled PIII(D6) equation
//   -z U U'' + z U'^2 - U U' + a U^3 + b U + g z U^4 + d z = 0
// (a, b, g, d) = (4 + alpha/n, 4 + beta/n, 4/n^2, -4/n^2), whose n -> oo limit
// (4, 4, 0, 0) is PIII(D8); plus the majorant radius bound and confluence gaps.

#include "pconf/backlund.hpp"
#include "pconf/exact.hpp"

#include <vector>

namespace pconf {

struct ScaledParams {
    cplx alphaN = 4.0, betaN = 4.0, gammaN = 0.0, deltaN = 0.0;

    static ScaledParams d6(cplx alpha, cplx beta, double n);
    static ScaledParams d8() { return {}; }
};

struct SeriesSolution {
    cplx v0;
    std::vector<cplx> coeffs;  // coeffs[k] = v_k, k = 0..K
    ScaledParams params;
    double radiusBound = 0.0;      // certified: majorant_radius(2|v0| + 1)
    double empiricalRadius = 0.0;  // root test on the upper half of coeffs

    // Horner evaluation; throws TruncationBudgetExceeded for |z| > 0.75 * empiricalRadius.
    cplx eval(cplx z) const;
    cplx derivative(cplx z, int order = 1) const;
    // |v_K z^K| + |v_{K-1} z^{K-1}|, a proxy for the truncation error.
    double tail_estimate(cplx z) const;
    double eval_radius() const { return 0.75 * empiricalRadius; }
};

// Throws ZeroInitialValue when v0 = 0.
SeriesSolution d6_series(cplx v0, const ScaledParams& params, int K = 60);
SeriesSolution d8_series(cplx U0, int K = 60);
// Same recurrence in exact arithmetic for rational U0 (debugging oracle).
std::vector<Rational> d8_series_exact(const Rational& U0, int K);

// Left side of the scaled equation evaluated with the truncated series.
cplx series_residual(const SeriesSolution& s, cplx z);

// Upsilon_k for k = 0..K, reported as W_k = Upsilon_k t^k to stay in range.
std::vector<double> majorant_sequence(double Upsilon0, int K, double t = 1.0);
// Half the distance to the fold of the real branch of the majorant's algebraic
// equation; a lower bound on the radius of every dominated series.
double majorant_radius(double Upsilon0);

struct GapPair {
    double even;  // |u_{2j}(z/2j) - U(z)|
    double odd;   // |u_{2j+1}(z/(2j+1)) + 1/U(z)|
};

// ev must reach index 2j+1; U is d8_series(tan(pi(m+1/2)/2)).
GapPair confluence_gap(const RationalSolutionEvaluator& ev, const SeriesSolution& U, int j, cplx z);
GapPair confluence_gap(int j, const Rational& m, cplx z);

}  // namespace pconf
