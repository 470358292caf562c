#include "pconf/backlund.hpp"

#include "pconf/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace pconf {
namespace {

RationalPoly xpoly() { return RationalPoly::monomial(Rational(1), 1); }

// With u = N/D: (A D) / (N B), where A and B are
//   2x(N'D - ND') + s (4x N^2 + 4x D^2) + a N D    (a = aA or aB)
// This covers both the forward map (s = +1) and its inverse (s = -1).
RationalFunction gromak_core(const RationalFunction& u, int s, const Rational& aA, const Rational& aB) {
    const RationalPoly& N = u.num();
    const RationalPoly& D = u.den();
    const RationalPoly X = xpoly();
    const RationalPoly W = poly_mul(poly_derivative(N), D) - poly_mul(N, poly_derivative(D));
    const RationalPoly ND = poly_mul(N, D);
    const RationalPoly quad = Rational(4 * s) * poly_mul(X, poly_mul(N, N) + poly_mul(D, D));
    const RationalPoly base = Rational(2) * poly_mul(X, W) + quad;
    const RationalPoly A = base + aA * ND;
    const RationalPoly B = base + aB * ND;
    const RationalPoly den = poly_mul(N, B);
    if (den.is_zero()) throw DegenerateDenominator("Gromak map denominator vanishes identically");
    return RationalFunction(poly_mul(A, D), den);
}

std::vector<cplx> poly_roots(const RationalPoly& p) {
    const int n = p.degree();
    if (n < 1) return {};
    const Rational lc = p.leading();
    std::vector<double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = to_double(p.coeff(i) / lc);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
    for (auto& r : roots) {
        for (int it = 0; it < 8; ++it) {
            cplx v = c[n], dv = 0.0;
            for (int i = n - 1; i >= 0; --i) {
                dv = dv * r + v;
                v = v * r + c[i];
            }
            if (dv == 0.0) break;
            const cplx step = v / dv;
            r -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
        }
    }
    return roots;
}

cplx eval_poly_c(const RationalPoly& p, cplx z) {
    cplx v = 0.0;
    for (int i = p.degree(); i >= 0; --i) v = v * z + to_double(p.coeff(i));
    return v;
}

}  // namespace

PIIIParams PIIIParams::rational_family(int n, const Rational& m) {
    Rational a = 4 * (Rational(n) + m);
    Rational b = 4 * (Rational(n) - m);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

RationalFunction gromak_forward(const RationalFunction& u, const PIIIParams& p) {
    // numerator uses -(beta+2), denominator +(alpha+2)
    return gromak_core(u, +1, -(p.beta + 2), p.alpha + 2);
}

RationalFunction gromak_inverse(const RationalFunction& uhat, const PIIIParams& p) {
    // numerator uses +(beta+2), denominator -(alpha+2)
    return gromak_core(uhat, -1, p.beta + 2, -(p.alpha + 2));
}

std::vector<RationalFunction> rational_un_chain(int nMax, const Rational& m) {
    if (nMax < 0) throw std::invalid_argument("rational_un: n >= 0 required");
    std::vector<RationalFunction> chain;
    chain.reserve(nMax + 1);
    chain.push_back(RationalFunction::constant(Rational(1)));
    for (int k = 0; k < nMax; ++k) chain.push_back(gromak_forward(chain.back(), PIIIParams::rational_family(k, m)));
    return chain;
}

RationalFunction rational_un(int n, const Rational& m) { return rational_un_chain(n, m).back(); }

RationalFunction umemura_ratio(int n, const UmemuraSequence& sm, const UmemuraSequence& smMinus1) {
    if (n == 0) return RationalFunction::constant(Rational(1));
    const RationalPoly num = poly_mul(smMinus1.poly(n), sm.poly(n - 1));
    const RationalPoly den = poly_mul(sm.poly(n), smMinus1.poly(n - 1));
    return RationalFunction(num, den);
}

RationalSolutionEvaluator::RationalSolutionEvaluator(const Rational& m, int nMax) : sm_(m), smm1_(m - 1) {
    sm_.extend(nMax);
    smm1_.extend(nMax);
}

Rational RationalSolutionEvaluator::eval(int n, const Rational& x) const {
    if (n == 0) return 1;
    const Rational den = sm_.eval(n, x) * smm1_.eval(n - 1, x);
    if (den == 0) throw PoleHit("u_" + std::to_string(n) + " has a pole at x = " + to_string(x));
    Rational v = smm1_.eval(n, x) * sm_.eval(n - 1, x) / den;
    v.canonicalize();
    return v;
}

cplx RationalSolutionEvaluator::eval(int n, cplx x) const {
    if (n == 0) return 1.0;
    const Rational re(x.real()), im(x.imag());
    if (im == 0) return to_double(eval(n, re));
    using GR = std::pair<Rational, Rational>;
    auto mul = [](const GR& a, const GR& b) -> GR {
        return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
    };
    const GR num = mul(smm1_.eval(n, re, im), sm_.eval(n - 1, re, im));
    const GR den = mul(sm_.eval(n, re, im), smm1_.eval(n - 1, re, im));
    const Rational nrm = den.first * den.first + den.second * den.second;
    if (nrm == 0) throw PoleHit("u_" + std::to_string(n) + " has a pole at the requested point");
    // num * conj(den) / |den|^2
    Rational vr = (num.first * den.first + num.second * den.second) / nrm;
    Rational vi = (num.second * den.first - num.first * den.second) / nrm;
    return {to_double(vr), to_double(vi)};
}

PoleZeroReport classify_poles_zeros(const RationalFunction& u) {
    PoleZeroReport rep;
    const RationalPoly& N = u.num();
    const RationalPoly& D = u.den();
    const RationalPoly dN = poly_derivative(N);
    const RationalPoly dD = poly_derivative(D);
    for (const cplx x0 : poly_roots(D)) {
        if (std::abs(x0) < 1e-12) continue;  // only x0 != 0 is classified
        const cplx res = eval_poly_c(N, x0) / eval_poly_c(dD, x0);
        const double sign = res.real() >= 0 ? 0.5 : -0.5;
        const double err = std::abs(res - sign);
        rep.maxClassificationError = std::max(rep.maxClassificationError, err);
        if (err > 1e-6) throw UnclassifiedSingularity("pole residue off +-1/2 by " + std::to_string(err));
        rep.poles.push_back({x0, res, sign});
    }
    for (const cplx x0 : poly_roots(N)) {
        if (std::abs(x0) < 1e-12) continue;
        const cplx der = eval_poly_c(dN, x0) / eval_poly_c(D, x0);
        const double sign = der.real() >= 0 ? 2.0 : -2.0;
        const double err = std::abs(der - sign);
        rep.maxClassificationError = std::max(rep.maxClassificationError, err);
        if (err > 1e-6) throw UnclassifiedSingularity("zero derivative off +-2 by " + std::to_string(err));
        rep.zeros.push_back({x0, der, sign});
    }
    return rep;
}

RationalFunction momentum_pn(const RationalFunction& u, int n, const Rational& m) {
    const RationalFunction X = RationalFunction::x();
    const RationalFunction u2 = u * u;
    Rational k = (2 * m - 2 * n + 1) / Rational(4);
    k.canonicalize();
    return X * u.derivative() / (RationalFunction::constant(Rational(4)) * u2) +
           Rational(1, 2) * X - X / (RationalFunction::constant(Rational(2)) * u2) -
           RationalFunction::constant(k) / u;
}

HamiltonianPair hamiltonian_hn(const RationalFunction& u, int n, const Rational& m) {
    const RationalFunction X = RationalFunction::x();
    const RationalFunction p = momentum_pn(u, n, m);
    const RationalFunction u2 = u * u;
    auto C = [](const Rational& c) { return RationalFunction::constant(c); };
    // x H = 2p^2u^2 + p(2x - 2x u^2 + (1+2m-2n) u) - (2m+1) x u
    const RationalFunction xH = Rational(2) * p * p * u2 +
                                p * (Rational(2) * X - Rational(2) * X * u2 + Rational(1 + 2 * m - 2 * n) * u) -
                                Rational(2 * m + 1) * X * u;
    const RationalFunction H = xH / X;
    const RationalFunction h = H + u * p / X - Rational(2) * X + C(Rational(n * n)) / X;
    return {H, h, p};
}

ResidualValue piii_residual(const RationalFunction& u, cplx alpha, cplx beta, cplx x) {
    const RationalFunction du = u.derivative();
    const RationalFunction ddu = du.derivative();
    const cplx v = ratfun_eval(u, x), dv = ratfun_eval(du, x), ddv = ratfun_eval(ddu, x);
    const cplx t[] = {ddv, dv * dv / v, dv / x, (alpha * v * v + beta) / x, 4.0 * v * v * v, 4.0 / v};
    double scale = 0.0;
    for (const cplx& ti : t) scale = std::max(scale, std::abs(ti));
    return {t[0] - t[1] + t[2] - t[3] - t[4] + t[5], scale};
}

ResidualValue piii_residual(const RationalFunction& u, const PIIIParams& p, cplx x) {
    return piii_residual(u, to_double(p.alpha), to_double(p.beta), x);
}

cplx even_origin_limit(cplx m) { return std::tan(std::numbers::pi * (m + 0.5) / 2.0); }

cplx odd_origin_limit(cplx m) { return -1.0 / std::tan(std::numbers::pi * (m + 0.5) / 2.0); }

cplx tau_logderivative_expansion(cplx x, int n, cplx m) {
    const double N = n;
    const cplx a = 2.0 * m + 1.0;
    return -a - a * (2.0 * m - 4.0 * N + 3.0) / (8.0 * x) + a * (1.0 - N) * N / (8.0 * x * x) +
           a * a * (N - 1.0) * N / (32.0 * x * x * x);
}

}  // namespace pconf
