#pragma once

// Exact rationals (GMP), univariate polynomials and rational functions over Q,
// and the constant-term-normalized float view used for evaluation.

#include "pconf/intpoly.hpp"

#include <gmpxx.h>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace pconf {

using Rational = mpq_class;
using cplx = std::complex<double>;

Rational make_rational(long num, long den = 1);
// Accepts "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(const Rational& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    // Value at re + i*im as (real, imaginary).
    std::pair<Rational, Rational> eval(const Rational& re, const Rational& im) const;

    RationalPoly operator-() const;
    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& c, const RationalPoly& a);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

// p = content * prim with prim primitive in Z[x] and positive leading coefficient.
struct ScaledPoly {
    Rational content;
    IntPoly prim;
};

ScaledPoly to_scaled(const RationalPoly& p);
RationalPoly from_scaled(const ScaledPoly& s);
Rational eval_scaled(const ScaledPoly& s, const Rational& x);
std::pair<Rational, Rational> eval_scaled(const ScaledPoly& s, const Rational& re, const Rational& im);

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q);
// r with q*r = p; throws NonDivisible.
RationalPoly poly_div_exact(const RationalPoly& p, const RationalPoly& q);
// (quotient, remainder) by long division over Q.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& p, const RationalPoly& q);
RationalPoly poly_derivative(const RationalPoly& p);
// Monic gcd; gcd(0, 0) = 0.
RationalPoly poly_gcd(const RationalPoly& p, const RationalPoly& q);

struct NormalizedPoly {
    Rational scale;             // p(0) if nonzero, else leading coefficient
    std::vector<double> coeffs; // p / scale
    cplx eval(cplx z) const;
    double max_abs_coeff() const;
};

NormalizedPoly poly_normalized_float(const RationalPoly& p);
NormalizedPoly poly_normalized_float(const ScaledPoly& p);

class RationalFunction {
public:
    RationalFunction();  // 0
    explicit RationalFunction(const RationalPoly& num);
    // Reduces to lowest terms with monic denominator; throws DegenerateDenominator on den = 0.
    RationalFunction(const RationalPoly& num, const RationalPoly& den);
    static RationalFunction constant(const Rational& c);
    static RationalFunction x();

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const;  // throws PoleHit at a pole
    RationalFunction derivative() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(char var = 'x') const;

private:
    struct Reduced {};
    RationalFunction(RationalPoly num, RationalPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    RationalPoly num_;
    RationalPoly den_;
};

RationalFunction operator*(const Rational& c, const RationalFunction& f);

struct RatfunEvalOptions {
    double pole_rel_tol = 1e-12;
};

// Float evaluation through the normalized coefficients; throws PoleHit when
// |den(z)| < tol * max|normalized den coeff|.
cplx ratfun_eval(const RationalFunction& f, cplx z, const RatfunEvalOptions& opt = {});

}  // namespace pconf
