#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace descents {

// Exact arithmetic throughout: GMP rationals are kept canonical
// (denominator > 0, reduced, zero stored as 0/1) by gmpxx itself.
// Caveat of the underlying library: the two-argument constructor
// Rational(p, q) does NOT reduce; call canonicalize() on such values
// before mixing them into arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form "p/q", denominator always present: "3/2", "-4/3", "0/1".
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign; canonicalizes. Throws ParseError.
Rational rational_from_string(const std::string& text);

// Fixed-point rendering with `digits` fractional digits, rounding half away
// from zero. Used only next to an exact field, never instead of one.
std::string rational_to_decimal(const Rational& r, int digits);

// C(top, k) for integer top (negative top follows the polynomial extension).
Integer binomial(long top, unsigned long k);

// C(x+c, n) evaluated at a rational point x: (x+c)(x+c-1)...(x+c-n+1)/n!.
Rational binomial_at(const Rational& x, long c, unsigned n);

// Coefficients p_0..p_n of C(x+c, n) as a polynomial in x.
std::vector<Rational> binom_in_x(long c, unsigned n);

// Horner evaluation of a coefficient vector (index = power of x).
Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x);

// p(x) -> p((x-1)/2), coefficients re-expanded in x.
std::vector<Rational> substitute_half_shift(const std::vector<Rational>& coeffs);

// p(x) -> p(x/2).
std::vector<Rational> substitute_half(const std::vector<Rational>& coeffs);

} // namespace descents
