#include "descents/structure.hpp"

#include "descents/errors.hpp"

#include <algorithm>
#include <map>

namespace descents {

namespace {

// statistics straight off a window (avoids building Permutation objects in
// the hot enumeration loops)
int des_of_window(const std::vector<int>& w) {
  int des = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) ++des;
  return des;
}

int cdes_of_window(const std::vector<int>& w) {
  int cdes = des_of_window(w);
  if (w.size() >= 2 && w.back() > w.front()) ++cdes;
  return cdes;
}

int des_of_signed_window(const std::vector<int>& w) {
  int des = w.front() < 0 ? 1 : 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) ++des;
  return des;
}

int ades_of_signed_window(const std::vector<int>& w) {
  return des_of_signed_window(w) + (w.back() > 0 ? 1 : 0);
}

long comaj_of_window(const std::vector<int>& w) {
  const long n = static_cast<long>(w.size());
  long comaj = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) comaj += n - static_cast<long>(i);
  return comaj;
}

long comaj_of_signed_window(const std::vector<int>& w) {
  const long n = static_cast<long>(w.size());
  long comaj = w.front() < 0 ? n : 0;  // descent at position 0
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) comaj += n - static_cast<long>(i);
  return comaj;
}

std::vector<std::vector<int>> group_windows(StructureKind kind, int n) {
  std::vector<std::vector<int>> out;
  if (group_of(kind) == GroupKind::A) {
    for (const auto& pi : enumerate_symmetric(n)) out.push_back(pi.window());
  } else {
    for (const auto& pi : enumerate_hyperoctahedral(n)) out.push_back(pi.window());
  }
  return out;
}

void require_rank(StructureKind kind, int n) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (kind == StructureKind::Cyclic && n < 2)
    throw DomainError("the cyclic kind needs n >= 2");
}

// binomial coefficient rule of the kind, as a polynomial in x
std::vector<Rational> coeff_rule_in_x(StructureKind kind, int n, int stat) {
  switch (kind) {
    case StructureKind::TypeA:
      return binom_in_x(n - 1 - stat, static_cast<unsigned>(n));
    case StructureKind::Cyclic: {
      auto v = binom_in_x(n - 1 - stat, static_cast<unsigned>(n - 1));
      const Rational inv_n(1, n);
      for (auto& c : v) c *= inv_n;
      return v;
    }
    case StructureKind::TypeB:
    case StructureKind::Augmented:
      return binom_in_x(n - stat, static_cast<unsigned>(n));
  }
  throw DomainError("unknown structure kind");
}

Rational coeff_rule_at(StructureKind kind, int n, int stat, const Rational& x) {
  switch (kind) {
    case StructureKind::TypeA:
      return binomial_at(x, n - 1 - stat, static_cast<unsigned>(n));
    case StructureKind::Cyclic:
      return binomial_at(x, n - 1 - stat, static_cast<unsigned>(n - 1)) / Rational(n);
    case StructureKind::TypeB:
    case StructureKind::Augmented:
      return binomial_at(x, n - stat, static_cast<unsigned>(n));
  }
  throw DomainError("unknown structure kind");
}

std::vector<int> inverse_window(GroupKind group, const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  detail::invert_window(group, w, inv);
  return inv;
}

} // namespace

GroupKind group_of(StructureKind kind) {
  return kind == StructureKind::TypeA || kind == StructureKind::Cyclic ? GroupKind::A
                                                                       : GroupKind::B;
}

const char* kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::TypeA: return "a";
    case StructureKind::Cyclic: return "cyclic";
    case StructureKind::TypeB: return "b";
    case StructureKind::Augmented: return "aug";
  }
  return "?";
}

IndexRange eulerian_index_range(StructureKind kind, int n) {
  switch (kind) {
    case StructureKind::TypeA: return {1, n};
    case StructureKind::Cyclic: return {1, n - 1};
    case StructureKind::TypeB: return {1, n + 1};
    case StructureKind::Augmented: return {1, n};
  }
  throw DomainError("unknown structure kind");
}

IndexRange idempotent_index_range(StructureKind kind, int n) {
  switch (kind) {
    case StructureKind::TypeA: return {1, n};
    case StructureKind::Cyclic: return {1, n - 1};
    case StructureKind::TypeB: return {0, n};
    case StructureKind::Augmented: return {1, n};
  }
  throw DomainError("unknown structure kind");
}

int statistic(StructureKind kind, const std::vector<int>& window) {
  switch (kind) {
    case StructureKind::TypeA: return des_of_window(window);
    case StructureKind::Cyclic: return cdes_of_window(window);
    case StructureKind::TypeB: return des_of_signed_window(window);
    case StructureKind::Augmented: return ades_of_signed_window(window);
  }
  throw DomainError("unknown structure kind");
}

RationalElement eulerian_element(int n, StructureKind kind, int i) {
  require_rank(kind, n);
  const auto range = eulerian_index_range(kind, n);
  if (!range.contains(i))
    throw DomainError("Eulerian index " + std::to_string(i) + " outside [" +
                      std::to_string(range.first) + ".." + std::to_string(range.last) + "]");
  // TypeA/TypeB use E_i = permutations with i-1 descents; Cyclic/Augmented
  // index by the statistic itself
  const int wanted =
      (kind == StructureKind::TypeA || kind == StructureKind::TypeB) ? i - 1 : i;
  RationalElement out(group_of(kind), n);
  for (const auto& w : group_windows(kind, n))
    if (statistic(kind, w) == wanted) out.add_term(w, Rational(1));
  return out;
}

RationalElement structure_poly_eval(int n, StructureKind kind, const Rational& x,
                                    bool bar_variant) {
  require_rank(kind, n);
  RationalElement out(group_of(kind), n);
  std::map<int, Rational> cache;
  for (const auto& w : group_windows(kind, n)) {
    const int stat = statistic(kind, w);
    auto it = cache.find(stat);
    if (it == cache.end()) it = cache.emplace(stat, coeff_rule_at(kind, n, stat, x)).first;
    if (sgn(it->second) == 0) continue;
    if (bar_variant)
      out.add_term(inverse_window(group_of(kind), w), it->second);
    else
      out.add_term(w, it->second);
  }
  return out;
}

IdempotentFamily structure_poly_coeffs(int n, StructureKind kind) {
  require_rank(kind, n);
  const auto range = idempotent_index_range(kind, n);
  const unsigned degree = kind == StructureKind::Cyclic ? static_cast<unsigned>(n - 1)
                                                        : static_cast<unsigned>(n);

  // expand, substitute, and split by powers of x
  std::map<int, std::vector<Rational>> rule_cache;
  std::vector<RationalElement> members(static_cast<std::size_t>(range.count()),
                                       RationalElement(group_of(kind), n));
  for (const auto& w : group_windows(kind, n)) {
    const int stat = statistic(kind, w);
    auto it = rule_cache.find(stat);
    if (it == rule_cache.end()) {
      std::vector<Rational> coeffs = coeff_rule_in_x(kind, n, stat);
      if (kind == StructureKind::TypeB)
        coeffs = substitute_half_shift(coeffs);
      else if (kind == StructureKind::Augmented)
        coeffs = substitute_half(coeffs);
      it = rule_cache.emplace(stat, std::move(coeffs)).first;
    }
    const auto& coeffs = it->second;
    for (unsigned power = 0; power <= degree; ++power) {
      const Rational& c = coeffs[power];
      if (sgn(c) == 0) continue;
      if (!range.contains(static_cast<int>(power)))
        throw InvariantViolation("structure polynomial has an x^" + std::to_string(power) +
                                 " term outside the expected index range");
      members[static_cast<std::size_t>(static_cast<int>(power) - range.first)].add_term(w, c);
    }
  }

  IdempotentFamily family{kind, n, range.first, std::move(members)};

  // orthogonal idempotent check: e_i e_j = δ_ij e_i
  for (int i = range.first; i <= range.last; ++i)
    for (int j = range.first; j <= range.last; ++j) {
      const RationalElement product = convolve(family.member(i), family.member(j));
      const bool ok = (i == j) ? product == family.member(i) : product.is_zero();
      if (!ok)
        throw InvariantViolation("idempotent family " + std::string(kind_name(kind)) + " n=" +
                                 std::to_string(n) + ": e_" + std::to_string(i) + "·e_" +
                                 std::to_string(j) + " is not " +
                                 (i == j ? "e_i" : "zero"));
    }

  // reconstruction check against the pointwise-evaluated polynomial
  for (long t = 1; t <= 2; ++t) {
    RationalElement sum(group_of(kind), n);
    Rational power = 1;
    for (int i = 0; i <= range.last; ++i) {
      if (i >= range.first) sum += family.member(i).scaled(power);
      power *= Rational(t);
    }
    Rational arg(t);
    if (kind == StructureKind::TypeB) arg = Rational(t - 1) / 2;
    if (kind == StructureKind::Augmented) arg = Rational(t) / 2;
    if (sum != structure_poly_eval(n, kind, arg))
      throw InvariantViolation("idempotent family does not reconstruct the structure "
                               "polynomial at x=" + std::to_string(t));
  }
  return family;
}

EulerianHistogram eulerian_polynomial(int n, StructureKind kind) {
  require_rank(kind, n);
  EulerianHistogram hist;
  int max_stat = 0;
  switch (kind) {
    case StructureKind::TypeA:     // exponent des+1, range 1..n
      hist.first_exponent = 1;
      max_stat = n - 1;
      break;
    case StructureKind::Cyclic:    // exponent cdes, range 1..n-1
      hist.first_exponent = 1;
      max_stat = n - 1;
      break;
    case StructureKind::TypeB:     // exponent des, range 0..n
      hist.first_exponent = 0;
      max_stat = n;
      break;
    case StructureKind::Augmented: // exponent ades, range 1..n
      hist.first_exponent = 1;
      max_stat = n;
      break;
  }
  const int shift = kind == StructureKind::TypeA ? 1 : 0;
  const int min_stat = hist.first_exponent - shift;
  hist.counts.assign(static_cast<std::size_t>(max_stat - min_stat + 1), Integer(0));
  for (const auto& w : group_windows(kind, n))
    ++hist.counts[static_cast<std::size_t>(statistic(kind, w) - min_stat)];
  return hist;
}

std::pair<RationalElement, RationalElement> loday_elements(int n, int k) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (k < 1 || k > n) throw DomainError("loday index k must lie in [1..n]");

  const auto signed_sum = [&](int m) {
    // l^m = (-1)^(m-1) Σ_{des π = m-1} sgn(π) π
    RationalElement out(GroupKind::A, n);
    const int outer = (m - 1) % 2 == 0 ? 1 : -1;
    for (const auto& pi : enumerate_symmetric(n)) {
      const auto& w = pi.window();
      if (des_of_window(w) != m - 1) continue;
      int inversions = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          if (w[i] > w[j]) ++inversions;
      const int sign = inversions % 2 == 0 ? 1 : -1;
      out.add_term(w, Rational(outer * sign));
    }
    return out;
  };

  RationalElement ell = signed_sum(k);
  RationalElement lambda(GroupKind::A, n);
  for (int i = 0; i <= k - 1; ++i) {
    Rational weight = Rational(binomial(n + i, static_cast<unsigned long>(i)));
    if (i % 2 == 1) weight = -weight;
    lambda += signed_sum(k - i).scaled(weight);
  }
  return {std::move(ell), std::move(lambda)};
}

RationalElement abs_coefficients(const RationalElement& a) {
  RationalElement out(a.kind(), a.rank());
  for (const auto& [key, c] : a.terms()) out.add_term_key(key, abs(c));
  return out;
}

RationalElement theta_map(const RationalElement& a) {
  if (a.kind() != GroupKind::A) throw DomainError("theta_map acts on Q[S_(n-1)]");
  const int n = a.rank() + 1;
  if (n > kMaxPackedRank) throw CapacityError("theta_map target rank exceeds the hard cap");
  RationalElement out(GroupKind::A, n);
  for (const auto& [key, c] : a.terms()) {
    const Permutation pi(unpack_window(key, a.rank()));
    for (const auto& sigma : cyclic_class(append_fixed_max(pi))) out.add_term(sigma.window(), c);
  }
  return out;
}

QElement q_structure_poly(int n, StructureKind kind, long k, bool bar_variant) {
  require_rank(kind, n);
  if (kind == StructureKind::Cyclic)
    throw DomainError("the cyclic kind has no q-structure polynomial here");
  if (k < 1) throw DomainError("q-structure polynomial needs an integer argument k >= 1");

  QElement out(group_of(kind), n);
  std::map<std::pair<int, long>, QPolynomial> cache;
  for (const auto& w : group_windows(kind, n)) {
    int stat = 0;
    long shift = 0;
    long top = 0;
    switch (kind) {
      case StructureKind::TypeA:
        stat = des_of_window(w);
        shift = comaj_of_window(w);
        top = k + n - 1 - stat;
        break;
      case StructureKind::TypeB:
        stat = des_of_signed_window(w);
        shift = comaj_of_signed_window(w);
        top = k + n - stat;
        break;
      case StructureKind::Augmented: {
        stat = ades_of_signed_window(w);
        // augmented comajor index: augmented descents strictly left of each
        // position; the possible extra descent at n contributes nothing
        shift = comaj_of_signed_window(w);
        top = k + n - stat;
        break;
      }
      default:
        break;
    }
    auto key = std::pair(stat, shift);
    auto it = cache.find(key);
    if (it == cache.end()) {
      QPolynomial coeff;
      if (top >= n) {
        QPolynomial qb = qbinomial(static_cast<unsigned long>(top), static_cast<unsigned long>(n));
        for (const auto& [e, c] : qb.terms()) coeff.add_term(e + shift, c);
      }
      it = cache.emplace(key, std::move(coeff)).first;
    }
    if (it->second.is_zero()) continue;
    if (bar_variant)
      out.add_term(inverse_window(group_of(kind), w), it->second);
    else
      out.add_term(w, it->second);
  }
  return out;
}

} // namespace descents
