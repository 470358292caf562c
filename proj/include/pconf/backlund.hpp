#pragma once

// Gromak's Backlund map on rational PIII(D6) solutions, the rational family
// u_n(x;m), pole/zero classification and the Hamiltonian quantities.

#include "pconf/exact.hpp"
#include "pconf/umemura.hpp"

#include <vector>

namespace pconf {

// PIII(D6) parameters. Kept exact because the Backlund algebra is exact.
struct PIIIParams {
    Rational alpha;
    Rational beta;

    // alpha = 4(n+m), beta = 4(n-m): parameters of u_n(x;m).
    static PIIIParams rational_family(int n, const Rational& m);
};

// u -> u_hat solving PIII with (alpha+4, beta+4); throws DegenerateDenominator.
RationalFunction gromak_forward(const RationalFunction& u, const PIIIParams& p);
// Inverse map; p are the parameters (alpha, beta) of the returned solution.
RationalFunction gromak_inverse(const RationalFunction& uhat, const PIIIParams& p);

// n-fold Backlund iterate of u_0 = 1 with alpha = 4m, beta = -4m.
RationalFunction rational_un(int n, const Rational& m);
std::vector<RationalFunction> rational_un_chain(int nMax, const Rational& m);

// s_n(x;m-1) s_{n-1}(x;m) / (s_n(x;m) s_{n-1}(x;m-1)) reduced; both sequences must reach n.
RationalFunction umemura_ratio(int n, const UmemuraSequence& sm, const UmemuraSequence& smMinus1);

// Evaluates u_n(x;m) through the Umemura ratio with exact arithmetic at a
// rational (or Gaussian-rational) point; suitable for large n.
class RationalSolutionEvaluator {
public:
    RationalSolutionEvaluator(const Rational& m, int nMax);
    const Rational& m() const { return sm_.m(); }
    int n_max() const { return sm_.max_index(); }
    // Throws PoleHit when x is a pole.
    cplx eval(int n, cplx x) const;
    Rational eval(int n, const Rational& x) const;

private:
    UmemuraSequence sm_;
    UmemuraSequence smm1_;
};

struct PoleEntry {
    cplx location;
    cplx residue;
    double residueSign;  // +1/2 or -1/2
};

struct ZeroEntry {
    cplx location;
    cplx derivative;
    double derivativeSign;  // +2 or -2
};

struct PoleZeroReport {
    std::vector<PoleEntry> poles;
    std::vector<ZeroEntry> zeros;
    double maxClassificationError = 0.0;
};

// Roots via companion-matrix eigenvalues plus Newton polishing; throws
// UnclassifiedSingularity when a residue or derivative is off by more than 1e-6.
PoleZeroReport classify_poles_zeros(const RationalFunction& u);

// p_n = x u'/(4u^2) + x/2 - x/(2u^2) - (2m-2n+1)/(4u)
RationalFunction momentum_pn(const RationalFunction& u, int n, const Rational& m);

struct HamiltonianPair {
    RationalFunction H;  // H_n
    RationalFunction h;  // h_n = H_n + u p/x - 2x + n^2/x
    RationalFunction p;  // p_n
};

HamiltonianPair hamiltonian_hn(const RationalFunction& u, int n, const Rational& m);

// Four-term large-x expansion of H_n + u_n p_n / x (error O(x^-4)):
//   -2m-1 - (2m+1)(2m-4n+3)/(8x) + (1+2m)(1-n)n/(8x^2) + (1+2m)^2 (n-1)n/(32x^3)
cplx tau_logderivative_expansion(cplx x, int n, cplx m);

// u'' - (u'^2/u - u'/x + (alpha u^2 + beta)/x + 4u^3 - 4/u), and the largest
// magnitude among those terms (the normalization scale).
struct ResidualValue {
    cplx residual;
    double scale;
};
ResidualValue piii_residual(const RationalFunction& u, cplx alpha, cplx beta, cplx x);
ResidualValue piii_residual(const RationalFunction& u, const PIIIParams& p, cplx x);

// tan(pi(m+1/2)/2) and -cot(pi(m+1/2)/2): the limits of u_{2k}(0;m) and u_{2k+1}(0;m).
cplx even_origin_limit(cplx m);
cplx odd_origin_limit(cplx m);

}  // namespace pconf
