#pragma once

// Umemura polynomials s_n(x;m) from the bilinear recurrence, their values at
// the origin, and the Laguerre-moment determinant representation.

#include "pconf/exact.hpp"

#include <vector>

namespace pconf {

// Holds s_{-1}, s_0, ..., s_N for one rational m. Each s_n is kept as
// content * primitive integer polynomial; deg s_n = n(n+1)/2.
class UmemuraSequence {
public:
    explicit UmemuraSequence(Rational m);

    const Rational& m() const { return m_; }
    int max_index() const { return static_cast<int>(s_.size()) - 2; }

    // Runs the recurrence up to s_upTo; throws NonDivisible if a division is inexact.
    void extend(int upTo);

    const ScaledPoly& scaled(int n) const;  // -1 <= n <= max_index()
    RationalPoly poly(int n) const;
    Rational at_zero(int n) const;
    Rational eval(int n, const Rational& x) const;
    std::pair<Rational, Rational> eval(int n, const Rational& re, const Rational& im) const;

private:
    Rational m_;
    std::vector<ScaledPoly> s_;  // s_[n + 1]
};

UmemuraSequence umemura_extend(UmemuraSequence seq, int upTo);

// phi_n(y) with phi_{-1} = phi_0 = 1; s_n(0;m) = phi_n(m + 1/2).
Rational phi_closed(int n, const Rational& y);

// u_n(0;m) as a finite product; throws HalfIntegerM on a vanishing denominator.
Rational un_zero_product(int n, const Rational& m);

// u_n(0;m) = G(1/4-m/2-n/2) G(3/4-m/2+n/2) / [G(1/4-m/2+n/2) G(3/4-m/2-n/2)], G = Gamma.
cplx un_zero_gamma(int n, cplx m);

// Taylor coefficient c_k of y^k in (1 + y/2)^{m+1/2} e^{xy}; c_k = 0 for k < 0.
Rational laguerre_moment(int k, const Rational& x, const Rational& m);

// det(c_{2j-k})_{j,k=1..n} (empty determinant = 1).
Rational laguerre_det(int n, const Rational& x, const Rational& m);

// s_n - P_n 2^{n(n+1)/2} det(c_{2j-k}) with P_n = prod_{l<=n} (2l-1)!!; zero when
// the representation holds. The power of 2 is always integral, see README.
Rational wronskian_2jk_check(int n, const Rational& x, const Rational& m);

// Float route on the unnormalized moments w_k = 2^{m+1/2} c_k:
// returns |s_n - P_n 2^{n^2/2 - mn} det(w_{2j-k})| / |s_n|.
double wronskian_2jk_check_float(int n, double x, double m);

}  // namespace pconf
