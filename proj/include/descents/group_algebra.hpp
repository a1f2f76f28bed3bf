#pragma once

#include "descents/errors.hpp"
#include "descents/permutation.hpp"
#include "descents/qpolynomial.hpp"
#include "descents/rational.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace descents {

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const QPolynomial& c) { return c.is_zero(); }

inline void add_product(Rational& dst, const Rational& a, const Rational& b) { dst += a * b; }
inline void add_product(QPolynomial& dst, const QPolynomial& a, const QPolynomial& b) {
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) dst.add_term(ea + eb, ca * cb);
}

inline void compose_windows(GroupKind kind, const std::vector<int>& a, const std::vector<int>& b,
                            std::vector<int>& out) {
  const std::size_t n = a.size();
  if (kind == GroupKind::A) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[static_cast<std::size_t>(b[i]) - 1];
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      int v = b[i];
      out[i] = v > 0 ? a[static_cast<std::size_t>(v) - 1] : -a[static_cast<std::size_t>(-v) - 1];
    }
  }
}

inline void invert_window(GroupKind kind, const std::vector<int>& w, std::vector<int>& out) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    int v = w[static_cast<std::size_t>(i)];
    if (kind == GroupKind::A || v > 0)
      out[static_cast<std::size_t>(std::abs(v)) - 1] = i + 1;
    else
      out[static_cast<std::size_t>(-v) - 1] = -(i + 1);
  }
}

} // namespace detail

// Sparse element of Q[S_n] or Q[B_n] (or the same algebras with QPolynomial
// coefficients). Terms are keyed by the packed window, so iteration order is
// lexicographic on windows — the canonical order for output and comparison.
template <class Coeff>
class GroupAlgebraElement {
public:
  GroupAlgebraElement(GroupKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1 || n > kMaxPackedRank) throw DomainError("group rank out of range");
  }

  static GroupAlgebraElement identity(GroupKind kind, int n) {
    GroupAlgebraElement e(kind, n);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    e.add_term_key(pack_window(w), Coeff(1));
    return e;
  }

  GroupKind kind() const { return kind_; }
  int rank() const { return n_; }
  const std::map<PermKey, Coeff>& terms() const& { return terms_; }
  const std::map<PermKey, Coeff>& terms() const&& = delete;
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient_key(PermKey key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  Coeff coefficient(const std::vector<int>& window) const {
    return coefficient_key(pack_window(window));
  }

  void add_term_key(PermKey key, const Coeff& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  void add_term(const std::vector<int>& window, const Coeff& c) {
    add_term_key(pack_window(window), c);
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other) {
    check_compatible(other);
    for (const auto& [k, c] : other.terms_) add_term_key(k, c);
    return *this;
  }
  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const {
    GroupAlgebraElement out = *this;
    out += other;
    return out;
  }
  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const {
    return *this + other.scaled(Coeff(-1));
  }

  GroupAlgebraElement scaled(const Coeff& c) const {
    GroupAlgebraElement out(kind_, n_);
    if (detail::coeff_is_zero(c)) return out;
    for (const auto& [k, coef] : terms_) out.add_term_key(k, coef * c);
    return out;
  }

  bool operator==(const GroupAlgebraElement& other) const {
    return kind_ == other.kind_ && n_ == other.n_ && terms_ == other.terms_;
  }
  bool operator!=(const GroupAlgebraElement& other) const { return !(*this == other); }

  void check_compatible(const GroupAlgebraElement& other) const {
    if (kind_ != other.kind_ || n_ != other.n_)
      throw DomainError("group algebra elements live in different algebras");
  }

private:
  GroupKind kind_;
  int n_;
  std::map<PermKey, Coeff> terms_;
};

using RationalElement = GroupAlgebraElement<Rational>;
using QElement = GroupAlgebraElement<QPolynomial>;

// Convolution product: (a·b)[π] = Σ_{στ=π} a[σ]·b[τ].
template <class Coeff>
GroupAlgebraElement<Coeff> convolve(const GroupAlgebraElement<Coeff>& a,
                                    const GroupAlgebraElement<Coeff>& b) {
  a.check_compatible(b);
  const int n = a.rank();
  std::vector<std::vector<int>> wa, wb;
  std::vector<const Coeff*> ca, cb;
  wa.reserve(a.support_size());
  ca.reserve(a.support_size());
  for (const auto& [k, c] : a.terms()) {
    wa.push_back(unpack_window(k, n));
    ca.push_back(&c);
  }
  wb.reserve(b.support_size());
  cb.reserve(b.support_size());
  for (const auto& [k, c] : b.terms()) {
    wb.push_back(unpack_window(k, n));
    cb.push_back(&c);
  }

  std::unordered_map<PermKey, Coeff> acc;
  acc.reserve(std::min<std::size_t>(wa.size() * wb.size(),
                                    static_cast<std::size_t>(group_order(a.kind(), n))));
  std::vector<int> scratch(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < wa.size(); ++i) {
    for (std::size_t j = 0; j < wb.size(); ++j) {
      detail::compose_windows(a.kind(), wa[i], wb[j], scratch);
      detail::add_product(acc[pack_window(scratch)], *ca[i], *cb[j]);
    }
  }

  GroupAlgebraElement<Coeff> out(a.kind(), n);
  for (auto& [k, c] : acc)
    if (!detail::coeff_is_zero(c)) out.add_term_key(k, c);
  return out;
}

// bar(a)[π] = a[π⁻¹]; an involution (and an anti-automorphism of the algebra).
template <class Coeff>
GroupAlgebraElement<Coeff> bar(const GroupAlgebraElement<Coeff>& a) {
  GroupAlgebraElement<Coeff> out(a.kind(), a.rank());
  std::vector<int> inv(static_cast<std::size_t>(a.rank()));
  for (const auto& [k, c] : a.terms()) {
    detail::invert_window(a.kind(), unpack_window(k, a.rank()), inv);
    out.add_term_key(pack_window(inv), c);
  }
  return out;
}

// The counit: sum of all coefficients. A ring map (checked by tests).
template <class Coeff>
Coeff augmentation(const GroupAlgebraElement<Coeff>& a) {
  Coeff total(0);
  for (const auto& [k, c] : a.terms()) total += c;
  return total;
}

// Sum of every group element with coefficient 1.
RationalElement all_ones_element(GroupKind kind, int n);

} // namespace descents
