#include "pconf/fredholm.hpp"

#include "pconf/errors.hpp"
#include "pconf/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace pconf {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

template <class T>
T frac(long p, long q);
template <>
double frac<double>(long p, long q) {
    return static_cast<double>(p) / static_cast<double>(q);
}
template <>
Rational frac<Rational>(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// a_j = (-1/4)^j / (j!)^2 for j = 0..N
template <class T>
std::vector<T> kernel_weights(int N) {
    std::vector<T> a(N + 1);
    a[0] = frac<T>(1, 1);
    for (int j = 1; j <= N; ++j) a[j] = a[j - 1] * frac<T>(-1, 4L * j * j);
    return a;
}

const std::vector<std::vector<double>>& cached_trace_table(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, trace_table<double>(N)).first;
    return it->second;
}

// K(x_i, y_j) = (1/4) sum_{m,n} a_m x_i^m H_mn a_n y_j^n, assembled as a
// matrix product. Accurate while sum_m |a_m| R^m stays O(e^{sqrt R}).
Eigen::MatrixXcd kernel_matrix(const std::vector<cplx>& x) {
    const int n = static_cast<int>(x.size());
    double R = 0;
    for (const cplx& v : x) R = std::max(R, std::abs(v));
    int M = 4;
    {
        double t = 1.0;
        for (int m = 1; m < 400; ++m) {
            t *= R / (4.0 * m * m);
            if (t < 1e-20) {
                M = std::max(M, m + 1);
                break;
            }
            M = m + 2;
        }
    }
    const auto a = kernel_weights<double>(M);
    Eigen::MatrixXcd Phi(M + 1, n);
    for (int i = 0; i < n; ++i) {
        cplx p = 1.0;
        for (int m = 0; m <= M; ++m) {
            Phi(m, i) = a[m] * p;
            p *= x[i];
        }
    }
    Eigen::MatrixXd H(M + 1, M + 1);
    for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= M; ++j) H(i, j) = 0.25 / (i + j + 1);
    return Phi.transpose() * H.cast<cplx>() * Phi;
}

Eigen::MatrixXcd nystrom_matrix(cplx r, int order) {
    std::vector<double> s, w;
    gauss_legendre_01(order, s, w);
    std::vector<cplx> x(order);
    for (int i = 0; i < order; ++i) x[i] = r * s[i];
    Eigen::MatrixXcd K;
    if (std::abs(r) <= 64.0) {
        K = kernel_matrix(x);
    } else {
        K.resize(order, order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) K(i, j) = bessel_kernel(x[i], x[j]);
    }
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) K(i, j) *= r * std::sqrt(w[i] * w[j]);
    return K;
}

cplx det_with_order(cplx r, const FredholmConfig& cfg, int order) {
    if (r == 0.0) return 1.0;
    Eigen::MatrixXcd A = -cfg.lambda * nystrom_matrix(r, order);
    A.diagonal().array() += 1.0;
    return A.partialPivLu().determinant();
}

cplx unwrapped_logdet(cplx r, const FredholmConfig& cfg, int order) {
    if (r == 0.0) return 0.0;
    const int steps = std::max(4, static_cast<int>(std::ceil(2.0 * std::abs(r))));
    cplx acc = 0.0;
    cplx prev = 1.0;
    for (int k = 1; k <= steps; ++k) {
        const cplx d = det_with_order(r * (static_cast<double>(k) / steps), cfg, order);
        if (d == 0.0) throw PoleHit("Fredholm determinant vanishes on the segment");
        acc += std::log(d / prev);
        prev = d;
    }
    return acc;
}

// ln D and its first three r-derivatives.
struct LogDerivs {
    cplx L0, L1, L2, L3;
    cplx det;
    double err;
};

LogDerivs series_log_derivs(cplx r, const FredholmConfig& cfg) {
    const int N = cfg.seriesOrder;
    const auto c = logdet_series_coeffs(cfg.lambda, N);
    LogDerivs d{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (int k = N; k >= 1; --k) {
        d.L0 = d.L0 * r + c[k];
        if (k >= 1) d.L1 = d.L1 * r + static_cast<double>(k) * c[k];
        if (k >= 2) d.L2 = d.L2 * r + static_cast<double>(k * (k - 1)) * c[k];
        if (k >= 3) d.L3 = d.L3 * r + static_cast<double>(k * (k - 1) * (k - 2)) * c[k];
    }
    // Horner above accumulated sum_k c_k r^{k-1} etc.; shift to the proper powers.
    d.L0 *= r;
    d.det = std::exp(d.L0);
    const double ar = std::abs(r);
    d.err = std::abs(c[N]) * std::pow(ar, N) + std::abs(c[N - 1]) * std::pow(ar, N - 1);
    return d;
}

LogDerivs nystrom_log_derivs(cplx r, const FredholmConfig& cfg) {
    // Trapezoidal Cauchy integrals on a circle give D(r), D'(r), D''(r)/2, D'''(r)/6.
    const double rho = cfg.fdStep * std::max(1.0, std::abs(r));
    const int P = cfg.fdPoints;
    cplx c[4] = {0.0, 0.0, 0.0, 0.0};
    for (int j = 0; j < P; ++j) {
        const cplx w = std::polar(1.0, 2.0 * kPi * j / P);
        const cplx D = det_with_order(r + rho * w, cfg, cfg.quadOrder);
        cplx wk = 1.0;
        for (int k = 0; k < 4; ++k) {
            c[k] += D / wk;
            wk *= w;
        }
    }
    for (int k = 0; k < 4; ++k) c[k] /= static_cast<double>(P) * std::pow(rho, k);
    const cplx D0 = det_with_order(r, cfg, cfg.quadOrder);
    const cplx g1 = c[1] / D0, g2 = 2.0 * c[2] / D0, g3 = 6.0 * c[3] / D0;
    LogDerivs d;
    d.det = D0;
    d.L0 = 0.0;  // filled by the caller when needed
    d.L1 = g1;
    d.L2 = g2 - g1 * g1;
    d.L3 = g3 - 3.0 * g1 * g2 + 2.0 * g1 * g1 * g1;
    d.err = std::abs(c[0] - D0) / std::max(std::abs(D0), 1e-300);
    return d;
}

FredholmMethod pick(cplx r, const FredholmConfig& cfg, FredholmMethod m) {
    if (m != FredholmMethod::Auto) return m;
    return std::abs(r) <= cfg.seriesMaxR ? FredholmMethod::Series : FredholmMethod::Nystrom;
}

// Complex scalar with the Rational scaling the generic solver needs.
struct CScalar {
    cplx v;
    CScalar operator+(const CScalar& o) const { return {v + o.v}; }
    CScalar operator-(const CScalar& o) const { return {v - o.v}; }
    CScalar operator*(const CScalar& o) const { return {v * o.v}; }
};
CScalar operator*(const Rational& q, const CScalar& c) { return {to_double(q) * c.v}; }

// Generic order-by-order solve of the sigma-form. S is cplx or RationalPoly;
// `div` divides by lambda(1 - lambda).
template <class S, class Div>
std::vector<S> sigma_coeffs_generic(const S& lam, const S& zero, const S& one, int K, Div div) {
    std::vector<S> s(K + 1, zero);
    if (K >= 1) s[1] = frac<Rational>(-1, 4) * lam;
    // s_2 = lambda(1 - lambda)/16
    if (K >= 2) s[2] = frac<Rational>(1, 16) * (lam * (one - lam));
    auto g = [&](int i) -> const S& { return (i >= 0 && i <= K) ? s[i] : zero; };
    // sigma-form coefficient of r^k:
    //   sum a_i a_{k-i} - sum b_i c_j d_{k-i-j}
    // a_i = (i+1) i s_{i+1}, b_i = (i+1) s_{i+1}, c_0 = 1 + 4 b_0, c_i = 4 b_i, d_i = (1-i) s_i
    for (int k = 3; k <= K; ++k) {
        auto a = [&](int i) { return Rational((i + 1) * i) * g(i + 1); };
        auto b = [&](int i) { return Rational(i + 1) * g(i + 1); };
        auto c = [&](int i) { return i == 0 ? one + Rational(4) * b(0) : Rational(4) * b(i); };
        auto d = [&](int i) { return Rational(1 - i) * g(i); };
        S R = zero;
        for (int i = 0; i <= k; ++i) R = R + a(i) * a(k - i);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; i + j <= k; ++j) R = R - b(i) * c(j) * d(k - i - j);
        // R is affine in s_k with slope (k-1)(4k s_2 - lambda(1-lambda)/4) = (k-1)^2 lambda(1-lambda)/4.
        s[k] = frac<Rational>(-4, static_cast<long>(k - 1) * (k - 1)) * div(R);
    }
    return s;
}

}  // namespace

cplx bessel_kernel(cplx x, cplx y) {
    if (std::abs(x - y) <= 1.0) {
        const double R = std::max({std::abs(x), std::abs(y), 1.0});
        int M = 4;
        double t = 1.0;
        for (int m = 1; m < 400; ++m) {
            t *= R / (4.0 * m * m);
            M = m + 2;
            if (t < 1e-20) break;
        }
        const auto a = kernel_weights<double>(M);
        std::vector<cplx> A(M + 1), B(M + 1);
        cplx px = 1.0, py = 1.0;
        for (int m = 0; m <= M; ++m) {
            A[m] = a[m] * px;
            B[m] = a[m] * py;
            px *= x;
            py *= y;
        }
        cplx s = 0.0;
        for (int m = 0; m <= M; ++m)
            for (int n = 0; n <= M; ++n) s += A[m] * B[n] / static_cast<double>(m + n + 1);
        return 0.25 * s;
    }
    return (sqrt_j1_sqrt(x) * j0_sqrt(y) - j0_sqrt(x) * sqrt_j1_sqrt(y)) / (2.0 * (x - y));
}

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2)p'^2) halved for [0,1]
    }
}

std::vector<cplx> trace_powers(cplx r, int L, const FredholmConfig& cfg) {
    if (L < 1) throw std::invalid_argument("trace_powers: L >= 1 required");
    auto run = [&](int order) {
        const Eigen::MatrixXcd M = nystrom_matrix(r, order);
        std::vector<cplx> tr;
        Eigen::MatrixXcd P = M;
        for (int l = 1; l <= L; ++l) {
            tr.push_back(P.trace());
            P = P * M;
        }
        return tr;
    };
    const auto full = run(cfg.quadOrder);
    const auto half = run(cfg.quadOrder / 2);
    for (int l = 0; l < L; ++l)
        if (std::abs(full[l] - half[l]) > 1e-10 * std::max(std::abs(full[l]), 1e-300) && std::abs(full[l]) > 1e-300)
            throw QuadratureDivergence("trace of power " + std::to_string(l + 1) + " not resolved by the node count");
    return full;
}

template <class T>
std::vector<std::vector<T>> trace_table(int N) {
    const auto a = kernel_weights<T>(N);
    const int n = N + 1;  // matrix indices 0..N
    const T zero = frac<T>(0, 1);
    std::vector<std::vector<T>> H(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H[i][j] = frac<T>(1, i + j + 1);
    // P[i][j][d]: coefficient of r^d in (HW)^t, truncated at degree N - 1.
    const int maxDeg = N - 1;
    using Poly3 = std::vector<std::vector<std::vector<T>>>;
    Poly3 P(n, std::vector<std::vector<T>>(n, std::vector<T>(maxDeg + 1, zero)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= maxDeg && j < n; ++j) P[i][j][j] = H[i][j] * a[j];
    std::vector<std::vector<T>> table(N + 1);
    for (int t = 1; t <= 2 * N; ++t) {
        if (t % 2 == 0) {
            const int l = t / 2;
            const int dmax = N - l;
            if (dmax < 0) break;
            table[l].assign(dmax + 1, zero);
            for (int d = 0; d <= dmax; ++d)
                for (int i = 0; i < n; ++i) table[l][d] += P[i][i][d];
        }
        if (t == 2 * N) break;
        // Degrees above N - ceil((t+1)/2) are never read again.
        const int need = std::min(maxDeg, N - (t + 2) / 2);
        Poly3 Q(n, std::vector<std::vector<T>>(n, std::vector<T>(maxDeg + 1, zero)));
        for (int j = 0; j < n && j <= need; ++j) {
            const T aj = a[j];
            for (int d = j; d <= need; ++d) {
                for (int i = 0; i < n; ++i) {
                    T s = zero;
                    for (int k = 0; k < n; ++k) s += P[i][k][d - j] * H[k][j];
                    Q[i][j][d] = s * aj;
                }
            }
        }
        P.swap(Q);
    }
    return table;
}

template std::vector<std::vector<double>> trace_table<double>(int);
template std::vector<std::vector<Rational>> trace_table<Rational>(int);

std::vector<cplx> logdet_series_coeffs(cplx lambda, int N) {
    if (N < 1) throw std::invalid_argument("seriesOrder >= 1 required");
    const auto& T = cached_trace_table(N);
    std::vector<cplx> c(N + 1, 0.0);
    for (int k = 1; k <= N; ++k) {
        cplx lp = 1.0;
        for (int l = 1; l <= k; ++l) {
            lp *= lambda / 4.0;
            c[k] -= lp * T[l][k - l] / static_cast<double>(l);
        }
    }
    return c;
}

std::vector<RationalPoly> logdet_series_coeffs_symbolic(int N) {
    const auto T = trace_table<Rational>(N);
    std::vector<RationalPoly> c(N + 1);
    for (int k = 1; k <= N; ++k) {
        std::vector<Rational> coef(k + 1);
        Rational q = 1;
        for (int l = 1; l <= k; ++l) {
            q /= 4;
            coef[l] = -q * T[l][k - l] / Rational(l);
        }
        c[k] = RationalPoly(coef);
    }
    return c;
}

cplx logdet_series(cplx r, const FredholmConfig& cfg) {
    if (std::abs(r) > cfg.seriesBudgetR)
        throw TruncationBudgetExceeded("|r| beyond the series budget " + std::to_string(cfg.seriesBudgetR));
    const LogDerivs d = series_log_derivs(r, cfg);
    if (d.err > 1e-12 * std::max(1.0, std::abs(d.L0)))
        throw TruncationBudgetExceeded("series tail " + std::to_string(d.err) + " too large at |r| = " +
                                       std::to_string(std::abs(r)));
    return d.L0;
}

cplx det_nystrom(cplx r, const FredholmConfig& cfg) { return det_with_order(r, cfg, cfg.quadOrder); }

cplx logdet_nystrom(cplx r, const FredholmConfig& cfg) {
    if (r == 0.0) return 0.0;
    const cplx full = unwrapped_logdet(r, cfg, cfg.quadOrder);
    const cplx dbl = unwrapped_logdet(r, cfg, 2 * cfg.quadOrder);
    if (std::abs(full - dbl) > 1e-10 * std::max(1.0, std::abs(full)))
        throw QuadratureDivergence("node doubling changes ln D by " + std::to_string(std::abs(full - dbl)));
    return full;
}

FredholmEval fredholm_eval(cplx r, const FredholmConfig& cfg, FredholmMethod method) {
    const FredholmMethod m = pick(r, cfg, method);
    FredholmEval e{};
    e.r = r;
    e.method = m;
    LogDerivs d;
    if (m == FredholmMethod::Series) {
        if (std::abs(r) > cfg.seriesBudgetR)
            throw TruncationBudgetExceeded("|r| beyond the series budget " + std::to_string(cfg.seriesBudgetR));
        d = series_log_derivs(r, cfg);
    } else {
        d = nystrom_log_derivs(r, cfg);
        d.L0 = r == 0.0 ? cplx(0.0) : unwrapped_logdet(r, cfg, cfg.quadOrder);
    }
    e.det = d.det;
    e.logDet = d.L0;
    e.sigma = r * d.L1;
    e.sigmaPrime = d.L1 + r * d.L2;
    e.sigmaSecond = 2.0 * d.L2 + r * d.L3;
    e.errEst = d.err;
    return e;
}

std::pair<cplx, cplx> sigma_and_prime(cplx r, const FredholmConfig& cfg, FredholmMethod method) {
    const FredholmEval e = fredholm_eval(r, cfg, method);
    return {e.sigma, e.sigmaPrime};
}

cplx sigma_form_residual(cplx r, const FredholmConfig& cfg, FredholmMethod method) {
    const FredholmEval e = fredholm_eval(r, cfg, method);
    const cplx rs2 = r * e.sigmaSecond;
    return rs2 * rs2 - e.sigmaPrime * (4.0 * e.sigmaPrime + 1.0) * (e.sigma - r * e.sigmaPrime);
}

std::vector<cplx> sigma_series_coeffs(cplx lambda, int K) {
    if (std::abs(lambda) < 1e-14 || std::abs(lambda - 1.0) < 1e-14)
        throw DegenerateLambda("the sigma recurrence needs lambda not in {0, 1}");
    const cplx ll = lambda * (1.0 - lambda);
    auto s = sigma_coeffs_generic<CScalar>(CScalar{lambda}, CScalar{0.0}, CScalar{1.0}, K,
                                              [&](const CScalar& R) { return CScalar{R.v / ll}; });
    std::vector<cplx> out(K + 1);
    for (int k = 0; k <= K; ++k) out[k] = s[k].v;
    return out;
}

std::vector<RationalPoly> sigma_series_coeffs_symbolic(int K) {
    const RationalPoly lam = RationalPoly::monomial(Rational(1), 1);
    const RationalPoly one = RationalPoly::constant(Rational(1));
    const RationalPoly ll = poly_mul(lam, one - lam);
    return sigma_coeffs_generic<RationalPoly>(lam, RationalPoly(), one, K,
                                              [&](const RationalPoly& R) { return poly_div_exact(R, ll); });
}

cplx lambda_of_m(cplx m) {
    const cplx den = 1.0 + std::exp(2.0 * kPi * kI * m);
    if (std::abs(den) < 1e-12) throw DegenerateLambda("lambda(m) is infinite for m in Z + 1/2");
    return 1.0 / den;
}

std::vector<cplx> u_path_from_fredholm(cplx z, cplx m, const FredholmConfig& cfg0, int steps) {
    FredholmConfig cfg = cfg0;
    cfg.lambda = lambda_of_m(m);
    if (steps <= 0) steps = std::clamp(static_cast<int>(std::ceil(std::abs(z) / 0.005)), 8, 64);
    std::vector<cplx> path{std::tan(kPi * (m + 0.5) / 2.0)};
    if (z == 0.0) return std::vector<cplx>(steps + 1, path[0]);
    for (int k = 1; k <= steps; ++k) {
        const cplx zk = z * (static_cast<double>(k) / steps);
        const cplx sp = fredholm_eval(32.0 * kI * zk, cfg).sigmaPrime;
        const cplx b = -16.0 * kI * sp - 2.0 * kI;
        const cplx disc = std::sqrt(b * b + 4.0);
        const cplx r1 = 0.5 * (b + disc), r2 = 0.5 * (b - disc);
        if (std::abs(r1 - r2) < 1e-6) throw BranchTrackingFailure("roots of U^2 - bU - 1 collide along the path");
        const cplx prev = path.back();
        path.push_back(std::abs(r1 - prev) <= std::abs(r2 - prev) ? r1 : r2);
        const double au = std::abs(path.back());
        if (au < 1e-6 || au > 1e6) throw BranchTrackingFailure("|U| left [1e-6, 1e6] along the path");
    }
    return path;
}

cplx u_from_fredholm(cplx z, cplx m, const FredholmConfig& cfg) { return u_path_from_fredholm(z, m, cfg).back(); }

std::vector<cplx> u_series_from_sigma(cplx m, int K) {
    const cplx lambda = lambda_of_m(m);
    const auto s = sigma_series_coeffs(lambda, K + 1);
    // b(z) = -16 i sigma'(32 i z) - 2i = sum b_k z^k
    std::vector<cplx> b(K + 1);
    cplx p = 1.0;
    for (int k = 0; k <= K; ++k) {
        b[k] = -16.0 * kI * static_cast<double>(k + 1) * s[k + 1] * p;
        p *= 32.0 * kI;
    }
    b[0] -= 2.0 * kI;
    std::vector<cplx> u(K + 1);
    u[0] = std::tan(kPi * (m + 0.5) / 2.0);
    // U^2 - bU - 1 = 0 order by order
    const cplx piv = 2.0 * u[0] - b[0];
    for (int k = 1; k <= K; ++k) {
        cplx acc = 0.0;
        for (int i = 1; i < k; ++i) acc -= u[i] * u[k - i];
        for (int i = 1; i <= k; ++i) acc += b[i] * u[k - i];
        u[k] = acc / piv;
    }
    return u;
}

}  // namespace pconf
