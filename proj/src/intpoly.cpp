#include "pconf/intpoly.hpp"

#include "pconf/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace pconf {

void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

size_t max_bits(const IntPoly& p) {
    size_t b = 0;
    for (const auto& c : p) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return b;
}

IntPoly zadd(const IntPoly& p, const IntPoly& q) {
    IntPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < p.size()) r[i] += p[i];
        if (i < q.size()) r[i] += q[i];
    }
    trim(r);
    return r;
}

IntPoly zsub(const IntPoly& p, const IntPoly& q) {
    IntPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < p.size()) r[i] += p[i];
        if (i < q.size()) r[i] -= q[i];
    }
    trim(r);
    return r;
}

IntPoly zscale(const IntPoly& p, const Integer& c) {
    if (sgn(c) == 0) return {};
    IntPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
    return r;
}

IntPoly zshift(const IntPoly& p, int k) {
    if (p.empty()) return {};
    IntPoly r(p.size() + static_cast<size_t>(k));
    std::copy(p.begin(), p.end(), r.begin() + k);
    return r;
}

IntPoly zderiv(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
    return r;
}

namespace {

constexpr size_t kLimb = GMP_NUMB_BITS;

size_t ceil_log2(size_t n) {
    size_t b = 0;
    while ((size_t{1} << b) < n) ++b;
    return b;
}

// Limbs per slot so that |c| < 2^(slot*kLimb - 1) whenever bits(c) <= bits.
size_t slot_for(size_t bits) { return (bits + 1) / kLimb + 1; }

// Sum of p_i B^i with B = 2^(slot*kLimb); coefficients of either sign.
Integer pack(const IntPoly& p, size_t slot) {
    if (p.empty()) return 0;
    const size_t n = p.size() * slot;
    Integer pos, neg;
    mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(n));
    mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(n));
    std::fill(pp, pp + n, mp_limb_t{0});
    std::fill(np, np + n, mp_limb_t{0});
    for (size_t i = 0; i < p.size(); ++i) {
        mpz_srcptr c = p[i].get_mpz_t();
        const size_t sz = mpz_size(c);
        const mp_limb_t* cl = mpz_limbs_read(c);
        mp_limb_t* dst = (mpz_sgn(c) > 0 ? pp : np) + i * slot;
        std::copy(cl, cl + sz, dst);
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(n));
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(n));
    return pos - neg;
}

// Inverse of pack for balanced digits |c_i| < B/2. Empty optional when v
// does not fit in `count` digits.
std::optional<IntPoly> unpack(const Integer& v, size_t slot, size_t count) {
    const bool neg = sgn(v) < 0;
    const Integer a = abs(v);
    const size_t n = mpz_size(a.get_mpz_t());
    const mp_limb_t* al = mpz_limbs_read(a.get_mpz_t());
    Integer half, base;
    mpz_setbit(half.get_mpz_t(), slot * kLimb - 1);
    mpz_setbit(base.get_mpz_t(), slot * kLimb);
    IntPoly out(count);
    int carry = 0;
    for (size_t i = 0; i < count; ++i) {
        const size_t lo = i * slot;
        Integer d;
        if (lo < n) {
            const size_t len = std::min(slot, n - lo);
            mpz_t tmp;
            mpz_set(d.get_mpz_t(), mpz_roinit_n(tmp, al + lo, static_cast<mp_size_t>(len)));
        }
        if (carry) d += 1;
        if (d >= half) {
            d -= base;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = neg ? Integer(-d) : d;
    }
    if (carry || n > count * slot) return std::nullopt;
    trim(out);
    return out;
}

IntPoly kron_mul(const IntPoly& p, const IntPoly& q, bool square) {
    const size_t bits = max_bits(p) + max_bits(q) + ceil_log2(std::min(p.size(), q.size())) + 1;
    const size_t slot = slot_for(bits);
    Integer v;
    if (square) {
        const Integer a = pack(p, slot);
        mpz_mul(v.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());
    } else {
        v = pack(p, slot) * pack(q, slot);
    }
    auto r = unpack(v, slot, p.size() + q.size() - 1);
    return std::move(*r);
}

bool small_product(const IntPoly& p, const IntPoly& q) {
    return std::min(p.size(), q.size()) < 12;
}

}  // namespace

IntPoly zmul_schoolbook(const IntPoly& p, const IntPoly& q) {
    if (p.empty() || q.empty()) return {};
    IntPoly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        for (size_t j = 0; j < q.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), p[i].get_mpz_t(), q[j].get_mpz_t());
    }
    trim(r);
    return r;
}

IntPoly zmul(const IntPoly& p, const IntPoly& q) {
    if (p.empty() || q.empty()) return {};
    if (small_product(p, q)) return zmul_schoolbook(p, q);
    return kron_mul(p, q, false);
}

IntPoly zsqr(const IntPoly& p) {
    if (p.empty()) return {};
    if (small_product(p, p)) return zmul_schoolbook(p, p);
    return kron_mul(p, p, true);
}

IntPoly zdiv_exact_schoolbook(const IntPoly& m, const IntPoly& d) {
    if (d.empty()) throw NonDivisible("division by the zero polynomial");
    if (m.empty()) return {};
    if (m.size() < d.size()) throw NonDivisible("dividend degree below divisor degree");
    IntPoly rem = m;
    IntPoly q(m.size() - d.size() + 1);
    const Integer& lc = d.back();
    for (size_t k = q.size(); k-- > 0;) {
        const Integer& top = rem[k + d.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
            throw NonDivisible("leading coefficient not divisible");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (size_t j = 0; j < d.size(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), d[j].get_mpz_t());
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) throw NonDivisible("nonzero remainder");
    trim(q);
    return q;
}

namespace {

// One Kronecker attempt at a given quotient bit budget. Empty optional means
// the budget was too small to conclude; throws when divisibility is refuted.
std::optional<IntPoly> kron_div_attempt(const IntPoly& m, const IntPoly& d, size_t qbits) {
    const size_t slot = slot_for(std::max(qbits, max_bits(m)));
    Integer vq, vr;
    const Integer vm = pack(m, slot), vd = pack(d, slot);
    mpz_tdiv_qr(vq.get_mpz_t(), vr.get_mpz_t(), vm.get_mpz_t(), vd.get_mpz_t());
    // d | m implies pack(d) | pack(m) for every base.
    if (sgn(vr) != 0) throw NonDivisible("nonzero remainder");
    auto q = unpack(vq, slot, m.size() - d.size() + 1);
    if (!q) return std::nullopt;
    // pack is injective on coefficients below B/2, so d*q = m follows.
    const size_t need = max_bits(d) + max_bits(*q) + ceil_log2(std::min(d.size(), q->size())) + 1;
    if (need + 1 > slot * kLimb) return std::nullopt;
    return q;
}

}  // namespace

IntPoly zdiv_exact(const IntPoly& m, const IntPoly& d) {
    if (d.empty()) throw NonDivisible("division by the zero polynomial");
    if (m.empty()) return {};
    if (m.size() < d.size()) throw NonDivisible("dividend degree below divisor degree");
    if (d.size() == 1) {
        IntPoly q(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (!mpz_divisible_p(m[i].get_mpz_t(), d[0].get_mpz_t()))
                throw NonDivisible("coefficient not divisible by constant");
            mpz_divexact(q[i].get_mpz_t(), m[i].get_mpz_t(), d[0].get_mpz_t());
        }
        return q;
    }
    const size_t lq = m.size() - d.size() + 1;
    if (std::min(d.size(), lq) < 12) return zdiv_exact_schoolbook(m, d);
    if (auto q = kron_div_attempt(m, d, max_bits(m) + ceil_log2(m.size()) + 64)) return *q;
    // Mignotte: a factor of m has coefficients below 2^deg * ||m||_2.
    if (auto q = kron_div_attempt(m, d, max_bits(m) + lq + ceil_log2(m.size()) + 2)) return *q;
    return zdiv_exact_schoolbook(m, d);
}

Integer zcontent(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly zprimitive(const IntPoly& p, Integer* content) {
    if (p.empty()) {
        if (content) *content = 0;
        return {};
    }
    Integer g = zcontent(p);
    if (sgn(p.back()) < 0) g = -g;
    IntPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
    if (content) *content = g;
    return r;
}

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u32(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2u, 3u, 5u, 7u}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 4759123141.
    for (u64 a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void mtrim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce_mod(const IntPoly& p, u64 prime) {
    ModPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), prime);
    mtrim(r);
    return r;
}

// Monic gcd over F_p.
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        const u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const u64 c = mulmod(a.back(), inv, p);
            const size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - mulmod(c, b[j], p)) % p;
            mtrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

bool divides(const IntPoly& d, const IntPoly& m) {
    try {
        (void)zdiv_exact(m, d);
        return true;
    } catch (const NonDivisible&) {
        return false;
    }
}

}  // namespace

IntPoly zgcd(const IntPoly& p0, const IntPoly& q0) {
    if (p0.empty()) return zprimitive(q0);
    if (q0.empty()) return zprimitive(p0);
    const IntPoly p = zprimitive(p0), q = zprimitive(q0);
    if (p.size() == 1 || q.size() == 1) return {Integer(1)};
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.back().get_mpz_t(), q.back().get_mpz_t());

    IntPoly acc, prev;
    Integer modulus = 0;
    int dmin = -1;
    for (u64 prime = 2147483647ULL; prime > 1000; prime -= 2) {
        if (!is_prime_u32(prime)) continue;
        if (mpz_fdiv_ui(p.back().get_mpz_t(), prime) == 0 || mpz_fdiv_ui(q.back().get_mpz_t(), prime) == 0)
            continue;
        ModPoly h = gcd_mod(reduce_mod(p, prime), reduce_mod(q, prime), prime);
        const int dh = static_cast<int>(h.size()) - 1;
        if (dh == 0) return {Integer(1)};
        if (dmin >= 0 && dh > dmin) continue;  // unlucky prime
        const u64 gm = mpz_fdiv_ui(g.get_mpz_t(), prime);
        for (auto& c : h) c = mulmod(c, gm, prime);
        if (dmin < 0 || dh < dmin) {
            dmin = dh;
            acc.assign(h.size(), Integer(0));
            for (size_t i = 0; i < h.size(); ++i) acc[i] = static_cast<unsigned long>(h[i]);
            modulus = static_cast<unsigned long>(prime);
            prev.clear();
            continue;
        }
        const u64 minv = powmod(mpz_fdiv_ui(modulus.get_mpz_t(), prime), prime - 2, prime);
        for (size_t i = 0; i < h.size(); ++i) {
            const u64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), prime);
            const u64 t = mulmod((h[i] + prime - ai) % prime, minv, prime);
            acc[i] += modulus * static_cast<unsigned long>(t);
        }
        modulus *= static_cast<unsigned long>(prime);
        const Integer halfm = modulus / 2;
        IntPoly sym(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) sym[i] = acc[i] > halfm ? Integer(acc[i] - modulus) : acc[i];
        if (sym == prev) {
            IntPoly cand = zprimitive(sym);
            if (divides(cand, p) && divides(cand, q)) return cand;
        }
        prev = std::move(sym);
    }
    throw NonDivisible("modular gcd exhausted its prime supply");
}

}  // namespace pconf
