#pragma once

// Scalar special functions: Bessel J0/J1, complex Gamma, Barnes G and the
// double-factorial product.

#include "pconf/intpoly.hpp"

#include <complex>

namespace pconf {

using cplx = std::complex<double>;

struct SpecFunResult {
    cplx value;
    double errEst;  // >= 0
};

// zeta'(-1) and Glaisher's constant A = exp(1/12 - zeta'(-1)).
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921;
inline constexpr double kGlaisherA = 1.2824271291006226369;

// J_nu(x) for nu in {0, 1}: series for |x| <= 20, Hankel expansion beyond.
SpecFunResult bessel_j_eval(int nu, cplx x);
cplx bessel_j(int nu, cplx x);

// Entire functions of t used by the Bessel kernel:
//   J0(sqrt t) and sqrt(t) J1(sqrt t), independent of the branch of sqrt.
cplx j0_sqrt(cplx t);
cplx sqrt_j1_sqrt(cplx t);

// Principal-branch log Gamma (continuous off the negative axis); throws GammaPole.
cplx log_gamma(cplx z);
SpecFunResult gamma_eval(cplx z);
cplx gamma_complex(cplx z);

// log G(z) modulo 2 pi i; throws BarnesZero at z = 0, -1, -2, ...
cplx log_barnes_g(cplx z);
// G(z), exactly 0 on the zero set.
cplx barnes_g(cplx z);

// prod_{l=1}^n (2l-1)!!
Integer double_factorial_product(int n);
double log_double_factorial_product(int n);
// Large-n form n^{n^2/2+n/2} e^{-3n^2/4-n/2} 2^{n^2/2+n} n^{1/24} 2^{5/24} e^{-zeta'(-1)/2}, as a log.
double log_double_factorial_product_asymptotic(int n);

}  // namespace pconf
