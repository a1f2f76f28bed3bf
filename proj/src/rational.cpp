#include "descents/rational.hpp"

#include "descents/errors.hpp"

#include <cctype>

namespace descents {

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw ParseError("bad rational literal: '" + text + "'");
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  Integer pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Integer num = abs(r.get_num()) * pow10;
  const Integer& den = r.get_den();
  // round half away from zero
  Integer scaled = (2 * num + den) / (2 * den);
  Integer whole = scaled / pow10;
  Integer frac = scaled % pow10;
  std::string out = (sgn(r) < 0 && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Integer binomial(long top, unsigned long k) {
  Integer t(top);
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), k);
  return out;
}

Rational binomial_at(const Rational& x, long c, unsigned n) {
  Rational prod = 1;
  Integer fact = 1;
  for (unsigned t = 0; t < n; ++t) {
    prod *= x + Rational(c - static_cast<long>(t));
    fact *= t + 1;
  }
  return prod / Rational(fact);
}

std::vector<Rational> binom_in_x(long c, unsigned n) {
  // expand (x + c)(x + c-1)...(x + c-n+1), then divide by n!
  std::vector<Rational> coeffs{Rational(1)};
  Integer fact = 1;
  for (unsigned t = 0; t < n; ++t) {
    Rational root(c - static_cast<long>(t));
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += coeffs[i] * root;
    }
    coeffs = std::move(next);
    fact *= t + 1;
  }
  Rational inv_fact = Rational(1) / Rational(fact);
  for (auto& coef : coeffs) coef *= inv_fact;
  return coeffs;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// p(x) -> p(a*x + b) via the binomial theorem, exact.
std::vector<Rational> substitute_affine(const std::vector<Rational>& coeffs, const Rational& a,
                                        const Rational& b) {
  std::vector<Rational> out(coeffs.size(), Rational(0));
  // powers of (a x + b) built iteratively
  std::vector<Rational> power{Rational(1)};  // (a x + b)^0
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0)
      for (std::size_t i = 0; i < power.size(); ++i) out[i] += coeffs[j] * power[i];
    // multiply power by (a x + b)
    std::vector<Rational> next(power.size() + 1, Rational(0));
    for (std::size_t i = 0; i < power.size(); ++i) {
      next[i + 1] += power[i] * a;
      next[i] += power[i] * b;
    }
    power = std::move(next);
  }
  return out;
}

} // namespace

std::vector<Rational> substitute_half_shift(const std::vector<Rational>& coeffs) {
  return substitute_affine(coeffs, Rational(1, 2), Rational(-1, 2));
}

std::vector<Rational> substitute_half(const std::vector<Rational>& coeffs) {
  return substitute_affine(coeffs, Rational(1, 2), Rational(0));
}

} // namespace descents
