#pragma once

// Dense polynomials over the integers. Index = degree, no trailing zeros,
// the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <vector>

namespace pconf {

using Integer = mpz_class;
using IntPoly = std::vector<Integer>;

void trim(IntPoly& p);
int degree(const IntPoly& p);
size_t max_bits(const IntPoly& p);

IntPoly zadd(const IntPoly& p, const IntPoly& q);
IntPoly zsub(const IntPoly& p, const IntPoly& q);
IntPoly zscale(const IntPoly& p, const Integer& c);
IntPoly zshift(const IntPoly& p, int k);  // p * x^k
IntPoly zderiv(const IntPoly& p);

// Products switch from schoolbook to Kronecker substitution on large inputs.
IntPoly zmul(const IntPoly& p, const IntPoly& q);
IntPoly zsqr(const IntPoly& p);
IntPoly zmul_schoolbook(const IntPoly& p, const IntPoly& q);

// q with d*q = m exactly; throws NonDivisible otherwise.
IntPoly zdiv_exact(const IntPoly& m, const IntPoly& d);
IntPoly zdiv_exact_schoolbook(const IntPoly& m, const IntPoly& d);

Integer zcontent(const IntPoly& p);  // nonnegative gcd of coefficients
// p / content with positive leading coefficient; sign folded into *content.
IntPoly zprimitive(const IntPoly& p, Integer* content = nullptr);

// Primitive gcd with positive leading coefficient (multi-modular).
IntPoly zgcd(const IntPoly& p, const IntPoly& q);

}  // namespace pconf
