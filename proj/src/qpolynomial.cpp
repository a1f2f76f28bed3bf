#include "descents/qpolynomial.hpp"

#include "descents/errors.hpp"

#include <sstream>
#include <vector>

namespace descents {

QPolynomial::QPolynomial(const Rational& constant) { add_term(0, constant); }

QPolynomial::QPolynomial(long constant) { add_term(0, Rational(constant)); }

QPolynomial QPolynomial::monomial(long exponent, const Rational& coeff) {
  QPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

Rational QPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPolynomial::add_term(long exponent, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  QPolynomial out = *this;
  out += other;
  return out;
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  QPolynomial out = *this;
  out -= other;
  return out;
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  QPolynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  *this = *this * other;
  return *this;
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
  QPolynomial out;
  if (sgn(c) == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

QPolynomial QPolynomial::substitute_power(long k) const {
  if (k < 1) throw DomainError("substitute_power: exponent must be >= 1");
  QPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

Rational QPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  Rational power = 1;
  long at = 0;
  for (const auto& [e, c] : terms_) {  // ascending exponents
    for (; at < e; ++at) power *= q;
    acc += c * power;
  }
  return acc;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (e == 0) {
      out << (a.get_den() == 1 ? a.get_num().get_str() : rational_to_string(a));
    } else {
      if (!unit) out << (a.get_den() == 1 ? a.get_num().get_str() : rational_to_string(a)) << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

QPolynomial qbinomial(unsigned long a, unsigned long b) {
  if (b > a) return QPolynomial();
  // row-by-row Pascal: [m over j]_q = [m-1 over j-1]_q + q^j [m-1 over j]_q
  std::vector<QPolynomial> row(b + 1);
  row[0] = QPolynomial(1);
  for (unsigned long m = 1; m <= a; ++m) {
    unsigned long top = std::min(m, b);
    for (unsigned long j = top; j >= 1; --j) {
      QPolynomial shifted;
      for (const auto& [e, c] : row[j].terms()) shifted.add_term(e + static_cast<long>(j), c);
      row[j] = row[j - 1] + shifted;
    }
  }
  return row[b];
}

QPolynomial q_integer(unsigned long k) {
  QPolynomial out;
  for (unsigned long e = 0; e < k; ++e) out.add_term(static_cast<long>(e), Rational(1));
  return out;
}

} // namespace descents
