#include "pconf/umemura.hpp"

#include "pconf/errors.hpp"
#include "pconf/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace pconf {
namespace {

ScaledPoly scaled_one() { return ScaledPoly{Rational(1), IntPoly{Integer(1)}}; }

// Gaussian elimination over Q with row pivoting on nonzero entries.
Rational rational_det(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Rational binom_rational(const Rational& a, int i) {
    Rational b = 1;
    for (int t = 0; t < i; ++t) b *= (a - t) / Rational(t + 1);
    return b;
}

}  // namespace

UmemuraSequence::UmemuraSequence(Rational m) : m_(std::move(m)) {
    m_.canonicalize();
    s_.push_back(scaled_one());
    s_.push_back(scaled_one());
}

void UmemuraSequence::extend(int upTo) {
    const Integer& p = m_.get_num();
    const Integer& q = m_.get_den();
    const Integer lin0 = 2 * p + q;  // q (4x + 2m + 1) = 4q x + (2p + q)
    const Integer lin1 = 4 * q;
    while (max_index() < upTo) {
        const int n = max_index();
        const ScaledPoly& cur = s_[n + 1];
        const ScaledPoly& prev = s_[n];
        const IntPoly& P = cur.prim;

        // With A = P^2 and D = P'^2:
        //   2q * numerator / c_n^2 = 2(4qx + 2p + q) A - q (A' + x A'' - 4x D)
        const IntPoly A = zsqr(P);
        const IntPoly dP = zderiv(P);
        const IntPoly D = zsqr(dP);
        const IntPoly dA = zderiv(A);
        const IntPoly ddA = zderiv(dA);
        IntPoly lhs = zadd(zscale(zshift(A, 1), 2 * lin1), zscale(A, 2 * lin0));
        IntPoly inner = zadd(dA, zshift(zsub(ddA, zscale(D, 4)), 1));
        IntPoly twoM = zsub(lhs, zscale(inner, q));
        IntPoly Q;
        try {
            Q = zdiv_exact(twoM, prev.prim);
        } catch (const NonDivisible&) {
            throw NonDivisible("recurrence step n = " + std::to_string(n) + " is not polynomial");
        }
        Integer cont;
        IntPoly prim = zprimitive(Q, &cont);
        // s_{n+1} = c_n^2 Q / (4 q c_{n-1})
        Rational c = cur.content * cur.content * Rational(cont) / (Rational(4 * q) * prev.content);
        c.canonicalize();
        s_.push_back(ScaledPoly{std::move(c), std::move(prim)});
    }
}

const ScaledPoly& UmemuraSequence::scaled(int n) const {
    if (n < -1 || n > max_index()) throw std::out_of_range("UmemuraSequence index " + std::to_string(n));
    return s_[n + 1];
}

RationalPoly UmemuraSequence::poly(int n) const { return from_scaled(scaled(n)); }

Rational UmemuraSequence::at_zero(int n) const {
    const ScaledPoly& s = scaled(n);
    Rational v = s.content * Rational(s.prim.empty() ? Integer(0) : s.prim[0]);
    v.canonicalize();
    return v;
}

Rational UmemuraSequence::eval(int n, const Rational& x) const { return eval_scaled(scaled(n), x); }

std::pair<Rational, Rational> UmemuraSequence::eval(int n, const Rational& re, const Rational& im) const {
    return eval_scaled(scaled(n), re, im);
}

UmemuraSequence umemura_extend(UmemuraSequence seq, int upTo) {
    seq.extend(upTo);
    return seq;
}

Rational phi_closed(int n, const Rational& y) {
    if (n < -1) throw std::invalid_argument("phi_closed: n >= -1 required");
    if (n <= 0) return 1;
    const int k = n / 2;
    const Rational y2 = y * y;
    auto pw = [](Rational b, int e) {
        Rational r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    // phi_{2k} = y^k (y^2-1)^k prod_{j=1}^{k-1} ((y^2-(2j)^2)(y^2-(2j+1)^2))^{k-j}
    Rational phi = pw(y, k) * pw(y2 - 1, k);
    for (int j = 1; j < k; ++j) phi *= pw((y2 - 4 * j * j) * (y2 - (2 * j + 1) * (2 * j + 1)), k - j);
    if (n % 2 == 1) {
        // phi_{2k+1} = phi_{2k} y prod_{j=1}^k (y^2 - 4j^2)
        phi *= y;
        for (int j = 1; j <= k; ++j) phi *= y2 - 4 * j * j;
    }
    phi.canonicalize();
    return phi;
}

Rational un_zero_product(int n, const Rational& m) {
    if (n < 0) throw std::invalid_argument("un_zero_product: n >= 0 required");
    const Rational a = m - Rational(1, 2);
    const Rational b = m + Rational(1, 2);
    Rational v = 1;
    auto factor = [&](const Rational& num, const Rational& den) {
        if (den == 0) throw HalfIntegerM("u_" + std::to_string(n) + "(0;m) has a vanishing denominator at m = " + to_string(m));
        v *= num / den;
    };
    const int k = n / 2;
    if (n % 2 == 0) {
        for (int j = 1; j <= k; ++j) factor(a * a - (2 * j - 1) * (2 * j - 1), b * b - (2 * j - 1) * (2 * j - 1));
    } else {
        factor(a, b);
        for (int j = 1; j <= k; ++j) factor(a * a - 4 * j * j, b * b - 4 * j * j);
    }
    v.canonicalize();
    return v;
}

cplx un_zero_gamma(int n, cplx m) {
    const double h = 0.5 * n;
    const cplx c = -0.5 * m;
    const cplx lg = log_gamma(0.25 + c - h) + log_gamma(0.75 + c + h) - log_gamma(0.25 + c + h) - log_gamma(0.75 + c - h);
    return std::exp(lg);
}

Rational laguerre_moment(int k, const Rational& x, const Rational& m) {
    if (k < 0) return 0;
    const Rational a = m + Rational(1, 2);
    Rational sum = 0;
    Rational xpow = 1;  // x^j / j!
    std::vector<Rational> xs(k + 1);
    for (int j = 0; j <= k; ++j) {
        xs[j] = xpow;
        xpow *= x / Rational(j + 1);
    }
    Rational two_pow = 1;  // 2^{-i}
    for (int i = 0; i <= k; ++i) {
        sum += binom_rational(a, i) * two_pow * xs[k - i];
        two_pow /= 2;
    }
    sum.canonicalize();
    return sum;
}

Rational laguerre_det(int n, const Rational& x, const Rational& m) {
    std::vector<Rational> c(2 * n + 1);
    for (int k = 0; k <= 2 * n; ++k) c[k] = laguerre_moment(k, x, m);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const int idx = 2 * j - k;
            a[j - 1][k - 1] = idx >= 0 ? c[idx] : Rational(0);
        }
    return rational_det(std::move(a));
}

Rational wronskian_2jk_check(int n, const Rational& x, const Rational& m) {
    if (n < 0) throw std::invalid_argument("wronskian_2jk_check: n >= 0 required");
    if (n == 0) return 0;
    UmemuraSequence seq(m);
    seq.extend(n);
    const Rational s = seq.eval(n, x);
    // 2^{n^2/2 - mn} 2^{n(m+1/2)} = 2^{n(n+1)/2}
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n * (n + 1) / 2));
    Rational rhs = Rational(double_factorial_product(n) * two_pow) * laguerre_det(n, x, m);
    Rational diff = s - rhs;
    diff.canonicalize();
    return diff;
}

double wronskian_2jk_check_float(int n, double x, double m) {
    if (n <= 0) return 0.0;
    const double a = m + 0.5;
    std::vector<double> w(2 * n + 1);
    for (int k = 0; k <= 2 * n; ++k) {
        // coefficient of y^k in (y + 2)^a e^{xy}
        double sum = 0.0, binom = 1.0;
        for (int i = 0; i <= k; ++i) {
            double xterm = 1.0;
            for (int j = 1; j <= k - i; ++j) xterm *= x / j;
            sum += binom * std::pow(2.0, a - i) * xterm;
            binom *= (a - i) / (i + 1);
        }
        w[k] = sum;
    }
    Eigen::MatrixXd mat(n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) mat(j - 1, k - 1) = 2 * j - k >= 0 ? w[2 * j - k] : 0.0;
    const double logpref = log_double_factorial_product(n) + (0.5 * n * n - m * n) * std::log(2.0);
    const double rhs = std::exp(logpref) * mat.determinant();
    UmemuraSequence seq{Rational(m)};
    seq.extend(n);
    const double s = to_double(seq.eval(n, Rational(x)));
    return std::abs(s - rhs) / std::abs(s);
}

}  // namespace pconf
