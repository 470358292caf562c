#include "pconf/series.hpp"

#include "pconf/errors.hpp"

#include <cmath>

namespace pconf {
namespace {

// Coefficients of the analytic solution with U(0) = v0. The running Cauchy
// powers S2 = U^2, S3 = U^3, S4 = U^4 are extended one index per step.
template <class T>
std::vector<T> scaled_recurrence(const T& v0, const T& a, const T& b, const T& g, const T& d, int K) {
    std::vector<T> v{v0};
    std::vector<T> S2, S3, S4;
    auto extend_powers = [&](int k) {
        // S2[k], S3[k], S4[k] need v_0..v_k
        T s2 = T(0), s3 = T(0), s4 = T(0);
        for (int i = 0; i <= k; ++i) s2 += v[i] * v[k - i];
        S2.push_back(s2);
        for (int i = 0; i <= k; ++i) s3 += S2[i] * v[k - i];
        S3.push_back(s3);
        for (int i = 0; i <= k; ++i) s4 += S3[i] * v[k - i];
        S4.push_back(s4);
    };
    extend_powers(0);
    if (K >= 1) {
        v.push_back(b + a * v0 * v0);
        extend_powers(1);
    }
    if (K >= 2) {
        const T three = T(3), four = T(4);
        v.push_back((three * a * v0 * v0 * v[1] + b * v[1] + g * v0 * v0 * v0 * v0 + d) / (four * v0));
        extend_powers(2);
    }
    for (int k = 2; k < K; ++k) {
        T s = T(0);
        for (int i = 1; i <= k; ++i) s += T(i * (k + 1 - 2 * i)) * v[i] * v[k + 1 - i];
        s += a * S3[k] + b * v[k] + g * S4[k - 1];
        v.push_back(s / (v0 * T((k + 1) * (k + 1))));
        extend_powers(k + 1);
    }
    return v;
}

double root_test_radius(const std::vector<cplx>& c) {
    const int K = static_cast<int>(c.size()) - 1;
    double r = std::numeric_limits<double>::infinity();
    for (int k = std::max(1, K / 2); k <= K; ++k) {
        const double a = std::abs(c[k]);
        if (a > 0) r = std::min(r, std::pow(a, -1.0 / k));
    }
    return r;
}

}  // namespace

ScaledParams ScaledParams::d6(cplx alpha, cplx beta, double n) {
    return {4.0 + alpha / n, 4.0 + beta / n, 4.0 / (n * n), -4.0 / (n * n)};
}

cplx SeriesSolution::eval(cplx z) const {
    if (std::abs(z) > eval_radius())
        throw TruncationBudgetExceeded("|z| = " + std::to_string(std::abs(z)) + " outside the series disk " +
                                       std::to_string(eval_radius()));
    cplx s = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) s = s * z + coeffs[k];
    return s;
}

cplx SeriesSolution::derivative(cplx z, int order) const {
    if (std::abs(z) > eval_radius()) throw TruncationBudgetExceeded("derivative outside the series disk");
    cplx s = 0.0;
    for (size_t k = coeffs.size(); k-- > static_cast<size_t>(order);) {
        double f = 1.0;
        for (int i = 0; i < order; ++i) f *= static_cast<double>(k - i);
        s = s * z + f * coeffs[k];
    }
    return s;
}

double SeriesSolution::tail_estimate(cplx z) const {
    const int K = static_cast<int>(coeffs.size()) - 1;
    const double az = std::abs(z);
    return std::abs(coeffs[K]) * std::pow(az, K) + std::abs(coeffs[K - 1]) * std::pow(az, K - 1);
}

SeriesSolution d6_series(cplx v0, const ScaledParams& p, int K) {
    if (v0 == 0.0) throw ZeroInitialValue("series solutions need U(0) != 0");
    if (K < 2) throw std::invalid_argument("d6_series: K >= 2 required");
    SeriesSolution s;
    s.v0 = v0;
    s.params = p;
    s.coeffs = scaled_recurrence<cplx>(v0, p.alphaN, p.betaN, p.gammaN, p.deltaN, K);
    s.radiusBound = majorant_radius(2.0 * std::abs(v0) + 1.0);
    s.empiricalRadius = root_test_radius(s.coeffs);
    return s;
}

SeriesSolution d8_series(cplx U0, int K) { return d6_series(U0, ScaledParams::d8(), K); }

std::vector<Rational> d8_series_exact(const Rational& U0, int K) {
    if (U0 == 0) throw ZeroInitialValue("series solutions need U(0) != 0");
    auto v = scaled_recurrence<Rational>(U0, Rational(4), Rational(4), Rational(0), Rational(0), K);
    for (auto& c : v) c.canonicalize();
    return v;
}

cplx series_residual(const SeriesSolution& s, cplx z) {
    const cplx u = s.eval(z), du = s.derivative(z, 1), ddu = s.derivative(z, 2);
    const ScaledParams& p = s.params;
    return -z * u * ddu + z * du * du - u * du + p.alphaN * u * u * u + p.betaN * u + p.gammaN * z * u * u * u * u +
           p.deltaN * z;
}

std::vector<double> majorant_sequence(double Y0, int K, double t) {
    if (!(Y0 > 0)) throw std::invalid_argument("majorant needs Upsilon0 > 0");
    // W_k = Upsilon_k t^k; the recurrence is homogeneous after this rescaling
    // except for the explicit powers of t below.
    std::vector<double> W{Y0};
    std::vector<double> S3, S4, S2;
    auto extend = [&](int k) {
        double s2 = 0, s3 = 0, s4 = 0;
        for (int i = 0; i <= k; ++i) s2 += W[i] * W[k - i];
        S2.push_back(s2);
        for (int i = 0; i <= k; ++i) s3 += S2[i] * W[k - i];
        S3.push_back(s3);
        for (int i = 0; i <= k; ++i) s4 += S3[i] * W[k - i];
        S4.push_back(s4);
    };
    extend(0);
    if (K >= 1) {
        W.push_back(5.0 * (1.0 + Y0 * Y0) * t);
        extend(1);
    }
    if (K >= 2) {
        W.push_back((76.0 * std::pow(Y0, 4) + 100.0 * Y0 * Y0 + 26.0) / (4.0 * Y0 * Y0) * t * t);
        extend(2);
    }
    for (int k = 2; k < K; ++k) {
        double s = 0;
        for (int a = 1; a <= k; ++a) s += W[a] * W[k + 1 - a];
        s += t * (5.0 * S3[k] + 5.0 * W[k]) + t * t * S4[k - 1];
        W.push_back(s / Y0);
        extend(k + 1);
    }
    return W;
}

double majorant_radius(double Y0) {
    if (!(Y0 > 0)) throw std::invalid_argument("majorant_radius needs Upsilon0 > 0");
    const double C = 82.0 * std::pow(Y0, 4) + 125.0 * Y0 * Y0 + 43.5;
    auto F = [&](double z, double U) {
        return -3.0 * Y0 * U + U * U + 2.0 * Y0 * Y0 - z * (C * z - 5.0 * U * U * U - 5.0 * U - z * std::pow(U, 4));
    };
    auto FU = [&](double z, double U) { return -3.0 * Y0 + 2.0 * U + z * (15.0 * U * U + 5.0 + 4.0 * z * U * U * U); };
    auto Fz = [&](double z, double U) { return -(2.0 * C * z - 5.0 * U * U * U - 5.0 * U - 2.0 * z * std::pow(U, 4)); };
    // Newton on F(z, .) from a predictor; false when it does not settle or F_U changed sign.
    auto correct = [&](double z, double& U) {
        for (int it = 0; it < 50; ++it) {
            const double fu = FU(z, U);
            if (fu >= 0) return false;
            const double step = F(z, U) / fu;
            U -= step;
            if (std::abs(step) <= 1e-15 * std::abs(U)) return FU(z, U) < 0;
        }
        return false;
    };
    // The real branch starts with F_U = -Upsilon0 < 0; the series radius is
    // the first z > 0 where F_U reaches 0 (positive coefficients put the
    // nearest singularity on the positive axis).
    double z = 0.0, U = Y0;
    double h = 1e-3 / (1.0 + Y0 * Y0 * Y0);
    while (h > 1e-15 * std::max(z, 1e-300)) {
        const double slope = -Fz(z, U) / FU(z, U);
        double U1 = U + h * slope;
        if (correct(z + h, U1)) {
            z += h;
            U = U1;
            h *= 1.5;
        } else {
            h *= 0.25;
        }
    }
    return 0.5 * z;
}

GapPair confluence_gap(const RationalSolutionEvaluator& ev, const SeriesSolution& U, int j, cplx z) {
    if (j < 1) throw std::invalid_argument("confluence_gap: j >= 1 required");
    if (ev.n_max() < 2 * j + 1) throw std::invalid_argument("confluence_gap: evaluator too short");
    const cplx Uz = U.eval(z);
    const cplx ue = ev.eval(2 * j, z / static_cast<double>(2 * j));
    const cplx uo = ev.eval(2 * j + 1, z / static_cast<double>(2 * j + 1));
    return {std::abs(ue - Uz), std::abs(uo + 1.0 / Uz)};
}

GapPair confluence_gap(int j, const Rational& m, cplx z) {
    const RationalSolutionEvaluator ev(m, 2 * j + 1);
    const SeriesSolution U = d8_series(even_origin_limit(to_double(m)));
    return confluence_gap(ev, U, j, z);
}

}  // namespace pconf
