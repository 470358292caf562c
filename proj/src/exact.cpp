#include "pconf/exact.hpp"

#include "pconf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace pconf {

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s0) {
    std::string s;
    for (char ch : s0)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.find('/') != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s0);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s0);
        r.canonicalize();
        return r;
    }
    // Decimal with optional exponent, converted exactly.
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool dot = false, any = false;
    for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
        if (s[pos] == '.') {
            if (dot) throw std::invalid_argument("bad rational: " + s0);
            dot = true;
        } else {
            digits += s[pos];
            any = true;
            if (dot) ++scale;
        }
    }
    if (!any) throw std::invalid_argument("bad rational: " + s0);
    long exp10 = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("bad rational: " + s0);
        size_t used = 0;
        exp10 = std::stol(s.substr(pos + 1), &used);
        if (pos + 1 + used != s.size()) throw std::invalid_argument("bad rational: " + s0);
    }
    Integer num(digits, 10);
    Integer p10;
    const long e = exp10 - scale;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    Rational r = e >= 0 ? Rational(num * p10) : Rational(num, p10);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

double to_double(const Rational& r) { return r.get_d(); }

// RationalPoly

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
}

Rational RationalPoly::eval(const Rational& x) const {
    if (c_.size() > 48) return eval_scaled(to_scaled(*this), x);
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::pair<Rational, Rational> RationalPoly::eval(const Rational& re, const Rational& im) const {
    return eval_scaled(to_scaled(*this), re, im);
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) { return poly_mul(a, b); }

RationalPoly operator*(const Rational& c, const RationalPoly& a) {
    if (sgn(c) == 0) return {};
    RationalPoly r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::string RationalPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        Rational c = c_[i];
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        c = abs(c);
        const bool unit = (c == 1) && i > 0;
        if (!unit) os << pconf::to_string(c);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// Scaled form

ScaledPoly to_scaled(const RationalPoly& p) {
    ScaledPoly s;
    if (p.is_zero()) {
        s.content = 0;
        return s;
    }
    Integer d = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    IntPoly a(p.coeffs().size());
    for (size_t i = 0; i < a.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        Integer f;
        mpz_divexact(f.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
        a[i] = c.get_num() * f;
    }
    Integer g;
    s.prim = zprimitive(a, &g);
    s.content = Rational(g, d);
    s.content.canonicalize();
    return s;
}

RationalPoly from_scaled(const ScaledPoly& s) {
    std::vector<Rational> c(s.prim.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s.content * Rational(s.prim[i]);
    return RationalPoly(std::move(c));
}

Rational eval_scaled(const ScaledPoly& s, const Rational& x) {
    if (s.prim.empty()) return 0;
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer r = s.prim.back(), bp = 1;
    for (size_t i = s.prim.size() - 1; i-- > 0;) {
        bp *= b;
        r = r * a + s.prim[i] * bp;
    }
    Rational v(r, bp);
    v.canonicalize();
    return s.content * v;
}

std::pair<Rational, Rational> eval_scaled(const ScaledPoly& s, const Rational& re, const Rational& im) {
    if (s.prim.empty()) return {Rational(0), Rational(0)};
    Integer c;
    mpz_lcm(c.get_mpz_t(), re.get_den_mpz_t(), im.get_den_mpz_t());
    const Integer a = re.get_num() * (c / re.get_den());
    const Integer b = im.get_num() * (c / im.get_den());
    Integer rr = s.prim.back(), ri = 0, cp = 1;
    for (size_t i = s.prim.size() - 1; i-- > 0;) {
        cp *= c;
        const Integer nr = rr * a - ri * b + s.prim[i] * cp;
        const Integer ni = rr * b + ri * a;
        rr = nr;
        ri = ni;
    }
    Rational vr(rr, cp), vi(ri, cp);
    vr.canonicalize();
    vi.canonicalize();
    return {s.content * vr, s.content * vi};
}

// Operations

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (std::min(p.coeffs().size(), q.coeffs().size()) < 8) {
        std::vector<Rational> r(p.coeffs().size() + q.coeffs().size() - 1, Rational(0));
        for (size_t i = 0; i < p.coeffs().size(); ++i)
            for (size_t j = 0; j < q.coeffs().size(); ++j) r[i + j] += p.coeffs()[i] * q.coeffs()[j];
        return RationalPoly(std::move(r));
    }
    const ScaledPoly a = to_scaled(p), b = to_scaled(q);
    return from_scaled({a.content * b.content, zmul(a.prim, b.prim)});
}

RationalPoly poly_div_exact(const RationalPoly& p, const RationalPoly& q) {
    if (q.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (p.is_zero()) return {};
    const ScaledPoly a = to_scaled(p), b = to_scaled(q);
    // Gauss: a primitive divisor of a primitive polynomial leaves a primitive quotient.
    return from_scaled({a.content / b.content, zdiv_exact(a.prim, b.prim)});
}

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& p, const RationalPoly& q) {
    if (q.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (p.degree() < q.degree()) return {RationalPoly(), p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quo(static_cast<size_t>(p.degree() - q.degree()) + 1, Rational(0));
    const Rational lc = q.leading();
    const auto& qc = q.coeffs();
    for (size_t k = quo.size(); k-- > 0;) {
        const Rational t = rem[k + qc.size() - 1] / lc;
        quo[k] = t;
        if (sgn(t) == 0) continue;
        for (size_t j = 0; j < qc.size(); ++j) rem[k + j] -= t * qc[j];
    }
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly poly_derivative(const RationalPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> r(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) r[i - 1] = p.coeffs()[i] * static_cast<long>(i);
    return RationalPoly(std::move(r));
}

RationalPoly poly_gcd(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() && q.is_zero()) return {};
    const IntPoly g = zgcd(to_scaled(p).prim, to_scaled(q).prim);
    ScaledPoly s{Rational(1) / Rational(g.back()), g};
    s.content.canonicalize();
    return from_scaled(s);
}

// Normalized float view

namespace {

double ratio_to_double(const Integer& a, const Integer& b) {
    Rational r(a, b);
    r.canonicalize();
    return r.get_d();
}

}  // namespace

cplx NormalizedPoly::eval(cplx z) const {
    cplx r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * z + coeffs[i];
    return r;
}

double NormalizedPoly::max_abs_coeff() const {
    double m = 0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

NormalizedPoly poly_normalized_float(const ScaledPoly& s) {
    if (s.prim.empty()) throw std::invalid_argument("normalization of the zero polynomial");
    NormalizedPoly n;
    const Integer& pivot = sgn(s.prim[0]) != 0 ? s.prim[0] : s.prim.back();
    n.scale = s.content * Rational(pivot);
    n.coeffs.resize(s.prim.size());
    for (size_t i = 0; i < s.prim.size(); ++i)
        n.coeffs[i] = (&s.prim[i] == &pivot) ? 1.0 : ratio_to_double(s.prim[i], pivot);
    return n;
}

NormalizedPoly poly_normalized_float(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("normalization of the zero polynomial");
    if (p.coeffs().size() > 48) return poly_normalized_float(to_scaled(p));
    NormalizedPoly n;
    n.scale = sgn(p.coeff(0)) != 0 ? p.coeff(0) : p.leading();
    n.coeffs.resize(p.coeffs().size());
    for (size_t i = 0; i < n.coeffs.size(); ++i) {
        const Rational q = p.coeffs()[i] / n.scale;
        n.coeffs[i] = q.get_d();
    }
    return n;
}

// RationalFunction

RationalFunction::RationalFunction() : num_(), den_(RationalPoly::constant(1)) {}

RationalFunction::RationalFunction(const RationalPoly& num) : num_(num), den_(RationalPoly::constant(1)) {}

RationalFunction::RationalFunction(const RationalPoly& num, const RationalPoly& den) {
    if (den.is_zero()) throw DegenerateDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = RationalPoly::constant(1);
        return;
    }
    ScaledPoly n = to_scaled(num), d = to_scaled(den);
    const IntPoly g = zgcd(n.prim, d.prim);
    if (g.size() > 1) {
        n.prim = zdiv_exact(n.prim, g);
        d.prim = zdiv_exact(d.prim, g);
    }
    // Monic denominator.
    const Rational lc = d.content * Rational(d.prim.back());
    n.content /= lc;
    d.content /= lc;
    num_ = from_scaled(n);
    den_ = from_scaled(d);
}

RationalFunction RationalFunction::constant(const Rational& c) { return RationalFunction(RationalPoly::constant(c)); }

RationalFunction RationalFunction::x() { return RationalFunction(RationalPoly::monomial(1, 1)); }

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (sgn(d) == 0) throw PoleHit("exact evaluation at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    const RationalPoly n = poly_derivative(num_) * den_ - num_ * poly_derivative(den_);
    return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DegenerateDenominator("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const Rational& c, const RationalFunction& f) {
    return RationalFunction(c * f.num(), f.den());
}

std::string RationalFunction::to_string(char var) const {
    if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

cplx ratfun_eval(const RationalFunction& f, cplx z, const RatfunEvalOptions& opt) {
    if (f.is_zero()) return 0.0;
    const NormalizedPoly n = poly_normalized_float(f.num());
    const NormalizedPoly d = poly_normalized_float(f.den());
    const cplx dv = d.eval(z);
    if (std::abs(dv) < opt.pole_rel_tol * d.max_abs_coeff()) throw PoleHit("denominator vanishes at evaluation point");
    const Rational s = n.scale / d.scale;
    return s.get_d() * (n.eval(z) / dv);
}

}  // namespace pconf
