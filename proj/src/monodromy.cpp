#include "pconf/monodromy.hpp"

#include "pconf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

namespace pconf {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

cplx expipi(cplx a) { return std::exp(I * kPi * a); }

Matrix2 mat(cplx a, cplx b, cplx c, cplx d) {
    Matrix2 M;
    M << a, b, c, d;
    return M;
}
Matrix2 S1(cplx s) { return mat(1.0, s, 0.0, 1.0); }
Matrix2 S2(cplx s) { return mat(1.0, 0.0, s, 1.0); }
// f^{sigma3}
Matrix2 dg(cplx f) { return mat(f, 0.0, 0.0, 1.0 / f); }

double opnorm(const Matrix2& M) { return M.cwiseAbs().rowwise().sum().maxCoeff(); }

// Deviation of a matrix product from its target, scaled by the product of the
// factor norms: rounding in the product is bounded by a small multiple of that.
double scaled_dev(const Matrix2& value, const Matrix2& target, std::initializer_list<Matrix2> factors) {
    double scale = 1.0;
    for (const auto& F : factors) scale *= opnorm(F);
    return opnorm(value - target) / std::max(scale, opnorm(target));
}

MonodromyData assemble(cplx th0, cplx thInf, cplx mu, cplx eta, cplx e0, cplx eInf, cplx e1, cplx e2) {
    MonodromyData d{th0, thInf, mu, eta, e0, eInf, e1, e2};
    check_generic(d);
    return d;
}

}  // namespace

MonodromyData MonodromyData::from_thetas(cplx theta0, cplx thetaInf, cplx mu, cplx eta) {
    return assemble(theta0, thetaInf, mu, eta, expipi(theta0 / 2.0), expipi(thetaInf / 2.0), expipi(mu), expipi(eta));
}

MonodromyData MonodromyData::from_alpha_beta(cplx alpha, cplx beta, cplx mu, cplx eta) {
    return from_thetas(alpha / 4.0, 1.0 - beta / 4.0, mu, eta);
}

MonodromyData MonodromyData::from_exponentials(cplx e0, cplx eInf, cplx e1, cplx e2) {
    auto expo = [](cplx e) { return std::log(e) / (I * kPi); };
    return assemble(2.0 * expo(e0), 2.0 * expo(eInf), expo(e1), expo(e2), e0, eInf, e1, e2);
}

bool is_generic(const MonodromyData& d) {
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const double t = kGenericityTol;
    if (std::abs(e1s * e1s - 1.0) <= t) return false;
    if (std::abs(d.e1 * d.e2) <= t) return false;
    for (cplx f : {eis, 1.0 / eis, e0s, 1.0 / e0s})
        if (std::abs(e1s - f) <= t) return false;
    return true;
}

void check_generic(const MonodromyData& d) {
    if (!is_generic(d))
        throw NonGeneric("e1 = (" + std::to_string(d.e1.real()) + ", " + std::to_string(d.e1.imag()) +
                         ") violates genericity");
}

StokesMultipliers stokes_multipliers(const MonodromyData& d) {
    check_generic(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    return {(eis - e1s) / (e1s * eis * eis), 1.0 - e1s * eis, (e1s - e0s) / e1s, e1s * e0s - 1.0};
}

std::array<double, 2> stokes_trace_residuals(const MonodromyData& d) {
    const auto s = stokes_multipliers(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const cplx tr = e1s + 1.0 / e1s;
    return {std::abs(tr - (eis + 1.0 / eis + s.s1Inf * s.s2Inf * eis)),
            std::abs(tr - (e0s + 1.0 / e0s + s.s10 * s.s20 / e0s))};
}

EigenvectorMatrices eigenvector_matrices(const MonodromyData& d) {
    check_generic(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const cplx q = e1s * e1s - 1.0;
    EigenvectorMatrices E;
    E.Einf = mat(e1s * (e1s - eis) / q, -1.0 / (e1s * eis), e1s * eis * (e1s * eis - 1.0) / q, 1.0);
    E.E0 = mat(e1s * (e0s * e1s - 1.0) / (e0s * q), (e1s - e0s) / (e1s * (e0s * e1s - 1.0)),
               e1s * (1.0 - e0s * e1s) / (e0s * q), 1.0);
    return E;
}

std::array<double, 2> eigen_residuals(const MonodromyData& d) {
    const auto s = stokes_multipliers(d);
    const auto E = eigenvector_matrices(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const Matrix2 L = dg(e1s);
    const Matrix2 ai = S1(s.s1Inf).inverse(), bi = dg(1.0 / eis), ci = S2(s.s2Inf).inverse();
    const Matrix2 a0 = S1(s.s10).inverse(), b0 = dg(e0s), c0 = S2(s.s20).inverse();
    return {scaled_dev(ai * bi * ci * E.Einf, E.Einf * L, {ai, bi, ci, E.Einf}),
            scaled_dev(a0 * b0 * c0 * E.E0, E.E0 * L, {a0, b0, c0, E.E0})};
}

ConnectionMatrices connection_matrices(const MonodromyData& d) {
    const auto s = stokes_multipliers(d);
    const auto E = eigenvector_matrices(d);
    const cplx e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    ConnectionMatrices C;
    C.Cminus = E.Einf * dg(d.e2) * E.E0.inverse();
    C.Cplus = dg(1.0 / eis) * S2(s.s2Inf).inverse() * C.Cminus * S2(s.s20) * dg(1.0 / e0s);
    C.CplusAlt = S1(s.s1Inf) * C.Cminus * S1(s.s10).inverse();
    return C;
}

double cplus_agreement(const MonodromyData& d) {
    const auto s = stokes_multipliers(d);
    const auto C = connection_matrices(d);
    const cplx e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    // both sides carry rounding; take the larger of the two factor scales
    return std::min(scaled_dev(C.Cplus, C.CplusAlt, {S1(s.s1Inf), C.Cminus, S1(s.s10).inverse()}),
                    scaled_dev(C.Cplus, C.CplusAlt,
                               {dg(1.0 / eis), S2(s.s2Inf).inverse(), C.Cminus, S2(s.s20), dg(1.0 / e0s)}));
}

std::array<double, 2> cyclic_residuals(const MonodromyData& d) {
    const auto s = stokes_multipliers(d);
    const auto C = connection_matrices(d);
    const cplx e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const Matrix2 Id = Matrix2::Identity();
    const Matrix2 Cmi = C.Cminus.inverse();
    const Matrix2 f1[] = {Cmi, S1(s.s1Inf).inverse(), C.Cplus, S1(s.s10)};
    const Matrix2 f2[] = {S2(s.s2Inf), dg(eis), C.Cplus, dg(e0s), S2(s.s20).inverse(), Cmi};
    return {scaled_dev(f1[0] * f1[1] * f1[2] * f1[3], Id, {f1[0], f1[1], f1[2], f1[3]}),
            scaled_dev(f2[0] * f2[1] * f2[2] * f2[3] * f2[4] * f2[5], Id, {f2[0], f2[1], f2[2], f2[3], f2[4], f2[5]})};
}

CubicPoint d6_point(const std::array<cplx, 3>& x, cplx e0, cplx eInf) {
    const cplx a = 1.0 / (e0 * e0), b = eInf * eInf;
    const cplx terms[] = {x[0] * x[1] * x[2], x[0] * x[0], x[1] * x[1], x[1] * (a + b), x[0] * (1.0 + a * b), a * b};
    cplx sum = 0.0;
    double big = 0.0;
    for (cplx t : terms) {
        sum += t;
        big = std::max(big, std::abs(t));
    }
    return {CubicKind::D6, x, std::abs(sum) / std::max(big, 1e-300)};
}

CubicPoint d8_point(const std::array<cplx, 3>& y) {
    const cplx terms[] = {y[0] * y[1] * y[2], y[0] * y[0], y[1] * y[1], 1.0};
    cplx sum = 0.0;
    double big = 0.0;
    for (cplx t : terms) {
        sum += t;
        big = std::max(big, std::abs(t));
    }
    return {CubicKind::D8, y, std::abs(sum) / big};
}

CubicPoint x_coords(const MonodromyData& d) {
    check_generic(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf, e2s = d.e2 * d.e2;
    const cplx D = e0s * e0s * e2s * eis * (1.0 - e0s * e1s) * (e1s * e1s - 1.0) * (e1s * e1s - 1.0);
    const cplx p = e0s * e1s - 1.0;
    const cplx x1 = e1s * (e0s * e2s * eis * (e1s * eis - 1.0) + e0s * e1s - 1.0) *
                    (p * p + e0s * e2s * eis * (e0s - e1s) * (eis - e1s)) / D;
    const cplx x2 = (e0s * e2s * e1s * eis * (e1s - eis) + 1.0 - e0s * e1s) *
                    (p * p + e0s * e1s * e2s * eis * (e0s - e1s) * (e1s * eis - 1.0)) / D;
    return d6_point({x1, x2, e1s + 1.0 / e1s}, d.e0, d.eInf);
}

CubicPoint y_coords(const MonodromyData& d, int rootChoice) {
    check_generic(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf, e2s = d.e2 * d.e2;
    const cplx R = static_cast<double>(rootChoice >= 0 ? 1 : -1) * std::sqrt((eis - e1s) / (1.0 - e0s * e1s));
    const cplx den = d.e0 * d.e2 * d.eInf * (eis - e1s) * (e1s * e1s - 1.0);
    const cplx y1 = I * R * (1.0 - e0s * e1s + e0s * e1s * e1s * e1s * e2s * eis * (e1s - eis)) / (d.e1 * den);
    const cplx y2 = I * R * d.e1 * (1.0 - e0s * e1s + e0s * e1s * e2s * eis * (e1s - eis)) / den;
    return d8_point({y1, y2, -e1s - 1.0 / e1s});
}

MonodromyData schlesinger_update(const MonodromyData& d, int n) {
    const double dn = n;
    const bool odd = (n % 2) != 0;
    const int eps = d.epsilon();
    const cplx mu = odd ? d.mu - 0.5 * eps : d.mu;
    const cplx e1 = odd ? d.e1 * expipi(-0.5 * eps) : d.e1;
    return assemble(d.theta0 + dn, d.thetaInf - dn, mu, d.eta, d.e0 * expipi(dn / 2.0), d.eInf * expipi(-dn / 2.0), e1,
                    d.e2);
}

MonodromyData inverted_e1_partner(const MonodromyData& d) {
    check_generic(d);
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf;
    const cplx r = std::sqrt((e1s - e0s) * (1.0 - e0s * e1s) / ((e1s - eis) * (1.0 - e1s * eis)));
    const cplx e2t = r / (d.e2 * e0s * eis);
    return assemble(d.theta0, d.thetaInf, -d.mu, std::log(e2t) / (I * kPi), d.e0, d.eInf, 1.0 / d.e1, e2t);
}

double d6_gradient_norm(const std::array<cplx, 3>& x, cplx e0, cplx eInf) {
    const cplx a = 1.0 / (e0 * e0), b = eInf * eInf;
    const cplx g1 = x[1] * x[2] + 2.0 * x[0] + (1.0 + a * b);
    const cplx g2 = x[0] * x[2] + 2.0 * x[1] + (a + b);
    const cplx g3 = x[0] * x[1];
    return std::sqrt(std::norm(g1) + std::norm(g2) + std::norm(g3));
}

std::vector<CubicPoint> singular_points(cplx e0, cplx eInf, double tol) {
    const cplx e0s = e0 * e0, eis = eInf * eInf;
    std::vector<CubicPoint> out;
    if (std::abs(1.0 / e0s - eis) <= tol) out.push_back(d6_point({0.0, -1.0 / e0s, e0s + 1.0 / e0s}, e0, eInf));
    if (std::abs(e0s - eis) <= tol) out.push_back(d6_point({-1.0, 0.0, e0s + 1.0 / e0s}, e0, eInf));
    return out;
}

std::vector<CubicPoint> singular_points(const MonodromyData& d) { return singular_points(d.e0, d.eInf); }

LimitingD8Data limiting_d8_data(const MonodromyData& d, Parity parity, int rootChoice) {
    const MonodromyData dn = schlesinger_update(d, parity == Parity::Odd ? 1 : 0);
    const cplx e1 = dn.e1, e1s = e1 * e1, e0s = dn.e0 * dn.e0, eis = dn.eInf * dn.eInf;
    const cplx W = static_cast<double>(rootChoice >= 0 ? 1 : -1) / std::sqrt((eis - e1s) / (1.0 - e0s * e1s));
    const cplx k = dn.e0 * dn.e2 * dn.eInf;
    const Matrix2 V = mat(0.0, -(k / I) / W, I * W / k, 0.0);
    const Matrix2 C = mat(1.0, e1s, -e1s, -1.0) * V * mat(e1, e1, -e1s * e1, -1.0 / e1).inverse();
    return {-(e1s + 1.0 / e1s), C, dn.mu};
}

MonodromyData rational_family_data(cplx m) {
    const cplx q = expipi(m);
    const cplx e2 = std::sqrt(expipi(-2.0 * m) * (1.0 - I * q) / (1.0 + I * q));
    const cplx e0 = expipi(m / 2.0);
    return assemble(m, m + 1.0, 0.25, std::log(e2) / (I * kPi), e0, I * e0, expipi(0.25), e2);
}

}  // namespace pconf
