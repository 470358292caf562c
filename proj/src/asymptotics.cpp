#include "pconf/asymptotics.hpp"

#include "pconf/backlund.hpp"
#include "pconf/errors.hpp"
#include "pconf/series.hpp"
#include "pconf/specfun.hpp"
#include "pconf/umemura.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

namespace pconf {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);
const double kLog2 = std::log(2.0);

// Sum of log G over the four arguments.
cplx log_g4(cplx a, cplx b, cplx c, cplx d) { return log_barnes_g(a) + log_barnes_g(b) + log_barnes_g(c) + log_barnes_g(d); }

// Adds the principal-argument step from prev to next to acc, i.e. unwraps log.
cplx unwrap_step(cplx acc, cplx prev, cplx next) {
    const double dphi = std::arg(next / prev);
    if (std::abs(dphi) > 1.0) throw BranchTrackingFailure("argument jumped by " + std::to_string(dphi) + " between samples");
    return acc + cplx(std::log(std::abs(next) / std::abs(prev)), dphi);
}

void check_u(cplx u) {
    const double a = std::abs(u);
    if (!(a >= 1e-6 && a <= 1e6)) throw BranchTrackingFailure("|U| left [1e-6, 1e6]");
}

double sgn_exponent(Parity p) { return p == Parity::Even ? -0.25 : 0.25; }

// eps * mu with eps = sgn Re mu; throws ExcludedReMu unless 0 < |Re mu| < 1/2.
cplx signed_mu(cplx mu) {
    const double r = std::abs(mu.real());
    if (r <= 1e-12 || r >= 0.5 - 1e-12)
        throw ExcludedReMu("Re mu = " + std::to_string(mu.real()) + " outside 0 < |Re mu| < 1/2");
    return mu.real() > 0 ? mu : -mu;
}

cplx cpow(cplx x, cplx e) { return std::exp(e * std::log(x)); }

}  // namespace

double log_abs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::abs(mn)) - std::log(md) + static_cast<double>(en - ed) * kLog2;
}

TrendReport fit_trend(const std::vector<double>& indices, const std::vector<double>& values, double minRate) {
    if (indices.size() != values.size() || indices.size() < 2)
        throw std::invalid_argument("fit_trend: need at least two (index, value) pairs");
    TrendReport t{indices, values, 0.0, false};
    std::vector<size_t> order(indices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return indices[a] < indices[b]; });
    const size_t use = std::min<size_t>(4, order.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t q = order.size() - use; q < order.size(); ++q) {
        const double v = values[order[q]];
        if (!(v > 0) || !(indices[order[q]] > 0)) return t;
        const double x = std::log(indices[order[q]]), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(use);
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    t.rateEstimate = -slope;
    t.pass = t.rateEstimate >= minRate;
    return t;
}

cplx sn0_asymptotic_log(int j, cplx m, Parity parity) {
    if (j < 1) throw std::invalid_argument("sn0_asymptotic: j >= 1 required");
    const double J = j, lj = std::log(J);
    const cplx h = m / 2.0;
    const cplx jexp = m * m / 2.0 + m / 2.0 + 1.0 / 24.0;
    const cplx c = std::cos(kPi * m);
    if (parity == Parity::Even) {
        return 0.5 * std::log(2.0 * kPi) + 4.0 * kZetaPrimeMinus1 + (2.0 * J * J + J + jexp) * lj - 3.0 * J * J - J +
               (2.0 * J * J + 2.0 * J) * kLog2 + J * std::log(-c) - log_g4(1.25 + h, 1.25 - h, 1.75 + h, 0.75 - h);
    }
    return 4.0 * kZetaPrimeMinus1 - 0.5 * std::log(2.0 * kPi) + (2.0 * J * J - J + jexp) * lj - 3.0 * J * J + J +
           2.0 * J * J * kLog2 + J * std::log(c) - log_g4(0.75 + h, 0.75 - h, 1.25 + h, 0.25 - h);
}

cplx sn0_asymptotic(int j, cplx m, Parity parity) { return std::exp(sn0_asymptotic_log(j, m, parity)); }

cplx umemura_ratio_rhs(cplx z, cplx m, Parity parity, const FredholmConfig& cfg0) {
    if (z == 0.0) return 1.0;
    FredholmConfig cfg = cfg0;
    cfg.lambda = lambda_of_m(m);
    const auto U = u_path_from_fredholm(z, m, cfg);
    cplx logRatio = 0.0;
    for (size_t k = 1; k < U.size(); ++k) {
        check_u(U[k]);
        logRatio = unwrap_step(logRatio, U[k - 1], U[k]);
    }
    const cplx logD = fredholm_eval(32.0 * I * z, cfg).logDet;
    return std::exp(2.0 * I * z + sgn_exponent(parity) * logRatio + 0.5 * logD);
}

cplx umemura_ratio_rhs_path(const std::vector<cplx>& waypoints, cplx z, cplx m, Parity parity,
                            const FredholmConfig& cfg0) {
    FredholmConfig cfg = cfg0;
    cfg.lambda = lambda_of_m(m);
    std::vector<cplx> corners{0.0};
    corners.insert(corners.end(), waypoints.begin(), waypoints.end());
    corners.push_back(z);
    cplx prevU = std::tan(kPi * (m + 0.5) / 2.0), prevD = 1.0;
    cplx logRatio = 0.0, logD = 0.0;
    for (size_t s = 1; s < corners.size(); ++s) {
        const cplx a = corners[s - 1], b = corners[s];
        const int steps = std::clamp(static_cast<int>(std::ceil(std::abs(b - a) / 0.005)), 8, 64);
        for (int k = 1; k <= steps; ++k) {
            const cplx p = a + (b - a) * (static_cast<double>(k) / steps);
            const cplx u = u_from_fredholm(p, m, cfg);
            check_u(u);
            const cplx d = fredholm_eval(32.0 * I * p, cfg).det;
            logRatio = unwrap_step(logRatio, prevU, u);
            logD = unwrap_step(logD, prevD, d);
            prevU = u;
            prevD = d;
        }
    }
    return std::exp(2.0 * I * z + sgn_exponent(parity) * logRatio + 0.5 * logD);
}

cplx umemura_ratio_quadrature(cplx z, cplx m, Parity parity, int nodes) {
    const SeriesSolution U = d8_series(even_origin_limit(m));
    std::vector<double> x, w;
    gauss_legendre_01(nodes, x, w);
    const double sgn = parity == Parity::Even ? -1.0 : 1.0;
    cplx integral = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const cplx y = z * x[i];
        const cplx u = U.eval(y), du = U.derivative(y, 1);
        const cplx q = du / u;
        integral += w[i] * (y * q * q / 8.0 + sgn * q / 4.0 - u + 1.0 / u);
    }
    return std::exp(z * integral);
}

cplx umemura_scaled_ratio(const UmemuraSequence& seq, int n, const Rational& zRe, const Rational& zIm) {
    const Rational scale(1, n + 1);
    const auto [re, im] = seq.eval(n, Rational(zRe * scale), Rational(zIm * scale));
    const Rational s0 = seq.at_zero(n);
    return {to_double(Rational(re / s0)), to_double(Rational(im / s0))};
}

cplx generic_leading(cplx x, const MonodromyData& d, cplx alpha, cplx beta) {
    check_generic(d);
    if (std::abs(std::exp(I * kPi * alpha / 8.0) - d.e0) > 1e-10 * std::abs(d.e0) ||
        std::abs(I * std::exp(-I * kPi * beta / 8.0) - d.eInf) > 1e-10 * std::abs(d.eInf))
        throw std::invalid_argument("generic_leading: (alpha, beta) inconsistent with e0, eInf");
    const cplx nu = signed_mu(d.mu);
    const int eps = d.epsilon();
    const cplx G = std::exp(2.0 * log_gamma(1.0 - 2.0 * nu) + log_gamma(nu - alpha / 8.0) +
                            log_gamma(nu + beta / 8.0 + 0.5) - 2.0 * log_gamma(2.0 * nu) -
                            log_gamma(1.0 - nu - alpha / 8.0) - log_gamma(0.5 - nu + beta / 8.0));
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf, e2s = d.e2 * d.e2;
    const cplx p = e0s * e1s - 1.0;
    const cplx B = e0s * e2s * eis * (e0s - e1s) * (e1s - eis) / (p * p);
    return -G * (eps > 0 ? B : 1.0 / B) * cpow(x, 4.0 * nu - 1.0);
}

cplx generic_leading(cplx x, const MonodromyData& d) { return generic_leading(x, d, d.alpha(), d.beta()); }

cplx un_leading(cplx x, const MonodromyData& d, int n) {
    const double dn = n;
    return generic_leading(x, schlesinger_update(d, n), d.alpha() + 4.0 * dn, d.beta() + 4.0 * dn);
}

cplx d8_leading(cplx z, const MonodromyData& d) {
    check_generic(d);
    const cplx nu = signed_mu(d.mu);
    const int eps = d.epsilon();
    const cplx e1s = d.e1 * d.e1, e0s = d.e0 * d.e0, eis = d.eInf * d.eInf, e2s = d.e2 * d.e2;
    const cplx K = e0s * e2s * eis * (eis - e1s) / (e0s * e1s - 1.0);
    const cplx pre = std::exp(2.0 * log_gamma(1.0 - 2.0 * nu) - 2.0 * log_gamma(2.0 * nu) - (4.0 * nu - 1.0) * kLog2);
    return -pre * cpow(z, 4.0 * nu - 1.0) * (eps > 0 ? K : 1.0 / K);
}

cplx dets_2jk_prefactor(int j, cplx m, Parity parity) {
    if (j < 1) throw std::invalid_argument("dets_2jk_prefactor: j >= 1 required");
    const double J = j;
    const cplx h = m / 2.0;
    const cplx c = std::cos(kPi * m);
    const double n = parity == Parity::Even ? 2.0 * J : 2.0 * J - 1.0;
    // 2^{2mn - n^2} converts the normalization s_n 2^{n^2/2 - mn}/P_n into D_n = s_n 2^{mn - n^2/2}/P_n
    const cplx common = -J * (2.0 * m + 1.0) * kLog2 + (2.0 * m * n - n * n) * kLog2 +
                        (m * m / 2.0 + m / 2.0) * std::log(J) + 4.5 * kZetaPrimeMinus1;
    if (parity == Parity::Even)
        return std::exp(common + J * std::log(-c) + 0.25 * kLog2 + 0.5 * std::log(kPi) -
                        log_g4(0.75 - h, 1.25 - h, 1.25 + h, 1.75 + h));
    return std::exp(common + J * std::log(c) + (0.25 + m) * kLog2 - 0.5 * std::log(kPi) -
                    log_g4(0.25 - h, 0.75 - h, 0.75 + h, 1.25 + h));
}

cplx dets_2jk_asymptotic(int j, cplx z, cplx m, Parity parity, const FredholmConfig& cfg) {
    return dets_2jk_prefactor(j, m, parity) * umemura_ratio_rhs(z, m, parity, cfg);
}

double dets_2jk_exact(int n, const Rational& x, const Rational& m) {
    const Rational det = laguerre_det(n, x, m);
    const double lg = log_abs(det) + n * (to_double(m) + 0.5) * kLog2;
    return (det < 0 ? -1.0 : 1.0) * std::exp(lg);
}

std::pair<cplx, cplx> un0_ratio_recursion(int k, const MonodromyData& d) {
    if (k < 0) throw std::invalid_argument("un0_ratio_recursion: k >= 0 required");
    const cplx t0 = d.theta0, ti = d.thetaInf;
    // ratio u_{n+2}(0)/u_n(0) with nu = eps_n mu_n
    auto ratio = [&](double n, cplx mun) {
        const cplx nu = mun.real() > 0 ? mun : -mun;
        return (n + 2.0 + 2.0 * nu - ti) * (n + 2.0 * nu + t0) / ((n + 2.0 - 2.0 * nu + t0) * (n + 2.0 - 2.0 * nu - ti));
    };
    const cplx muOdd = d.mu - 0.5 * static_cast<double>(d.epsilon());
    return {ratio(2.0 * k, d.mu), k >= 1 ? ratio(2.0 * k - 1, muOdd) : cplx(std::nan(""), 0.0)};
}

std::pair<Rational, Rational> un0_ratio_recursion(int k, const Rational& theta0, const Rational& thetaInf,
                                                  const Rational& mu) {
    if (k < 0) throw std::invalid_argument("un0_ratio_recursion: k >= 0 required");
    if (mu == 0 || abs(mu) >= Rational(1, 2)) throw ExcludedReMu("exact ratio needs 0 < |mu| < 1/2");
    auto ratio = [&](int n, const Rational& mun) {
        const Rational nu = abs(mun);
        Rational r = (n + 2 + 2 * nu - thetaInf) * (n + 2 * nu + theta0) /
                     ((n + 2 - 2 * nu + theta0) * (n + 2 - 2 * nu - thetaInf));
        r.canonicalize();
        return r;
    };
    const Rational muOdd = mu > 0 ? Rational(mu - Rational(1, 2)) : Rational(mu + Rational(1, 2));
    return {ratio(2 * k, mu), k >= 1 ? ratio(2 * k - 1, muOdd) : Rational(0)};
}

}  // namespace pconf
