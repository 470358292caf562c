#include "pconf/specfun.hpp"

#include "pconf/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace pconf {
namespace {

using lcplx = std::complex<long double>;

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesMaxAbs = 20.0;

// B_{2k} for k = 1..11.
constexpr std::array<double, 11> kBernoulli2k = {
    1.0 / 6,         -1.0 / 30,       1.0 / 42,      -1.0 / 30,
    5.0 / 66,        -691.0 / 2730,   7.0 / 6,       -3617.0 / 510,
    43867.0 / 798,   -174611.0 / 330, 854513.0 / 138};

bool is_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-14 * std::max(1.0, std::abs(z.real()))) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= 1e-14 * std::max(1.0, std::abs(r));
}

// sum_k (-t/4)^k / (k! (k+nu)!) in long double; returns (sum, largest |term|).
std::pair<lcplx, long double> entire_bessel_series(lcplx t, int nu) {
    const lcplx q = -t / 4.0L;
    lcplx term = 1.0L;
    for (int k = 1; k <= nu; ++k) term /= static_cast<long double>(k);
    lcplx sum = term;
    long double big = std::abs(term);
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * static_cast<long double>(k + nu));
        sum += term;
        big = std::max(big, std::abs(term));
        if (std::abs(term) <= 1e-22L * std::abs(sum) && k > 2) break;
    }
    return {sum, big};
}

// Hankel expansion, valid for Re x >= 0 and |x| large.
cplx bessel_hankel(int nu, cplx x, double* err) {
    const double mu = 4.0 * nu * nu;
    cplx p = 0.0, q = 0.0;
    cplx a = 1.0;  // a_k(nu) / x^k
    double prev = 1e300;
    double last = 0.0;
    for (int k = 0; k < 60; ++k) {
        const double mag = std::abs(a);
        if (mag > prev) break;  // asymptotic series: stop at the smallest term
        prev = mag;
        last = mag;
        const int sgn = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) p += static_cast<double>(sgn) * a;
        else q += static_cast<double>(sgn) * a;
        if (mag < 1e-18) break;
        const double odd = 2.0 * k + 1.0;
        a *= (mu - odd * odd) / (8.0 * (k + 1)) / x;
    }
    const cplx w = x - (0.5 * nu + 0.25) * kPi;
    const cplx pref = std::sqrt(2.0 / (kPi * x));
    if (err) *err = last * std::abs(pref) * std::cosh(std::abs(x.imag()));
    return pref * (p * std::cos(w) - q * std::sin(w));
}

cplx log_gamma_shifted(cplx z) {
    // Re z >= 0.5 here.
    cplx acc = 0.0;
    while (std::abs(z) < 15.0) {
        acc -= std::log(z);
        z += 1.0;
    }
    const cplx zi = 1.0 / z;
    const cplx zi2 = zi * zi;
    cplx s = 0.0;
    cplx pw = zi;
    for (size_t k = 0; k < kBernoulli2k.size(); ++k) {
        const double n2 = 2.0 * (k + 1);
        s += kBernoulli2k[k] / (n2 * (n2 - 1.0)) * pw;
        pw *= zi2;
    }
    return acc + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + s;
}

// log G(1 + w) for Re w >= 20.
cplx log_barnes_asymptotic(cplx w) {
    const cplx lw = std::log(w);
    cplx s = 0.5 * w * w * lw - 0.75 * w * w + 0.5 * w * std::log(2.0 * kPi) - lw / 12.0 + kZetaPrimeMinus1;
    const cplx wi2 = 1.0 / (w * w);
    cplx pw = wi2;
    for (int k = 1; k + 1 <= static_cast<int>(kBernoulli2k.size()); ++k) {
        s += kBernoulli2k[k] / (4.0 * k * (k + 1)) * pw;  // B_{2k+2}
        pw *= wi2;
    }
    return s;
}

}  // namespace

SpecFunResult bessel_j_eval(int nu, cplx x) {
    if (nu != 0 && nu != 1) throw std::invalid_argument("bessel_j: nu must be 0 or 1");
    if (std::abs(x) <= kSeriesMaxAbs) {
        const lcplx lx(x.real(), x.imag());
        auto [s, big] = entire_bessel_series(lx * lx, nu);
        if (nu == 1) s *= lx / 2.0L;
        const long double scale = nu == 1 ? std::abs(lx) / 2.0L : 1.0L;
        const cplx v(static_cast<double>(s.real()), static_cast<double>(s.imag()));
        const double err = static_cast<double>(64.0L * std::numeric_limits<long double>::epsilon() * big * scale) +
                           std::numeric_limits<double>::epsilon() * std::abs(v);
        return {v, err};
    }
    double err = 0.0;
    if (x.real() >= 0.0) {
        const cplx v = bessel_hankel(nu, x, &err);
        return {v, err};
    }
    // J_nu(-x) = (-1)^nu J_nu(x)
    const cplx v = bessel_hankel(nu, -x, &err);
    return {nu == 1 ? -v : v, err};
}

cplx bessel_j(int nu, cplx x) { return bessel_j_eval(nu, x).value; }

cplx j0_sqrt(cplx t) {
    if (std::abs(t) <= kSeriesMaxAbs * kSeriesMaxAbs) {
        const auto s = entire_bessel_series(lcplx(t.real(), t.imag()), 0).first;
        return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    return bessel_j(0, std::sqrt(t));
}

cplx sqrt_j1_sqrt(cplx t) {
    if (std::abs(t) <= kSeriesMaxAbs * kSeriesMaxAbs) {
        const lcplx lt(t.real(), t.imag());
        const auto s = entire_bessel_series(lt, 1).first * lt / 2.0L;
        return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    const cplx r = std::sqrt(t);
    return r * bessel_j(1, r);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw GammaPole("Gamma has a pole at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_shifted(1.0 - z);
    }
    return log_gamma_shifted(z);
}

SpecFunResult gamma_eval(cplx z) {
    const cplx lg = log_gamma(z);
    const cplx v = std::exp(lg);
    const double err = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lg)) * std::abs(v);
    return {v, err};
}

cplx gamma_complex(cplx z) { return gamma_eval(z).value; }

cplx log_barnes_g(cplx z) {
    if (is_nonpositive_integer(z)) throw BarnesZero("G vanishes at z = " + std::to_string(z.real()));
    // log G(z) = log G(z+1) - log Gamma(z)
    cplx acc = 0.0;
    while ((z - 1.0).real() < 20.0) {
        acc -= log_gamma(z);
        z += 1.0;
    }
    return acc + log_barnes_asymptotic(z - 1.0);
}

cplx barnes_g(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return std::exp(log_barnes_g(z));
}

Integer double_factorial_product(int n) {
    Integer prod = 1;
    Integer df;
    for (int l = 1; l <= n; ++l) {
        mpz_2fac_ui(df.get_mpz_t(), static_cast<unsigned long>(2 * l - 1));
        prod *= df;
    }
    return prod;
}

double log_double_factorial_product(int n) {
    // (2l-1)!! = 2^l Gamma(l + 1/2) / sqrt(pi)
    double s = 0.0;
    for (int l = 1; l <= n; ++l) s += l * std::log(2.0) + std::lgamma(l + 0.5) - 0.5 * std::log(kPi);
    return s;
}

double log_double_factorial_product_asymptotic(int n) {
    const double N = n;
    const double ln2 = std::log(2.0);
    return (N * N / 2 + N / 2) * std::log(N) - 0.75 * N * N - N / 2 + (N * N / 2 + N) * ln2 + std::log(N) / 24.0 +
           5.0 / 24.0 * ln2 - kZetaPrimeMinus1 / 2;
}

}  // namespace pconf
