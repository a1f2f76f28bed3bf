#pragma once

#include "descents/rational.hpp"

#include <map>
#include <string>

namespace descents {

// Univariate polynomial in q with rational coefficients, sparse, no stored
// zeros. The coefficient ring for every q-analog in the library.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(const Rational& constant);
  explicit QPolynomial(long constant);
  static QPolynomial monomial(long exponent, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial reported as -1 (every exponent here is >= 0)
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  const std::map<long, Rational>& terms() const& { return terms_; }
  // iterating the terms of a temporary would dangle
  const std::map<long, Rational>& terms() const&& = delete;
  Rational coefficient(long exponent) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial scaled(const Rational& c) const;
  bool operator==(const QPolynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const QPolynomial& other) const { return terms_ != other.terms_; }

  void add_term(long exponent, const Rational& coeff);

  // q -> q^k (exponent scaling); k >= 1
  QPolynomial substitute_power(long k) const;

  Rational evaluate(const Rational& q) const;

  // human-readable form, e.g. "1 + q + 2*q^2"
  std::string to_string() const;

private:
  std::map<long, Rational> terms_;
};

// Gaussian binomial coefficient: a_q! / (b_q! (a-b)_q!), zero when b > a,
// built by the Pascal recurrence so no polynomial division is needed.
QPolynomial qbinomial(unsigned long a, unsigned long b);

// [k]_q = 1 + q + ... + q^(k-1)
QPolynomial q_integer(unsigned long k);

} // namespace descents
