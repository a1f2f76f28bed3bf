#include "descents/ppartition.hpp"

#include "descents/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace descents {

namespace {

void check_work_limit(long scale, int n) {
  if (scale <= 0) return;
  double raw = std::pow(static_cast<double>(scale), n);
  if (raw > static_cast<double>(kOracleWorkLimit))
    throw CapacityError("oracle instance has ~" + std::to_string(raw) +
                        " raw assignments, over the limit " + std::to_string(kOracleWorkLimit));
}

// Deterministic topological order of the labels 1..n (smallest label first
// among available minima).
std::vector<int> topo_order(const Poset& p) {
  const int n = p.size();
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.less(i, j)) ++indeg[static_cast<std::size_t>(j)];
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(order.size()) < n) {
    int pick = 0;
    for (int v = 1; v <= n; ++v)
      if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int j = 1; j <= n; ++j)
      if (p.less(pick, j)) --indeg[static_cast<std::size_t>(j)];
  }
  return order;
}

// Assignment order for the free labels 1..n of a B poset: first occurrence
// of each absolute value in a topological sort of all 2n+1 elements.
std::vector<int> b_assignment_order(const BPoset& p) {
  const int n = p.size();
  const int count = 2 * n + 1;
  std::vector<int> indeg(static_cast<std::size_t>(count), 0);
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j)
      if (p.less(i, j)) ++indeg[static_cast<std::size_t>(j + n)];
  std::vector<bool> placed(static_cast<std::size_t>(count), false);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  for (int step = 0; step < count; ++step) {
    int pick = -n - 1;
    for (int v = -n; v <= n; ++v)
      if (!placed[static_cast<std::size_t>(v + n)] && indeg[static_cast<std::size_t>(v + n)] == 0) {
        pick = v;
        break;
      }
    placed[static_cast<std::size_t>(pick + n)] = true;
    int a = std::abs(pick);
    if (a != 0 && !seen[static_cast<std::size_t>(a)]) {
      seen[static_cast<std::size_t>(a)] = true;
      order.push_back(a);
    }
    for (int j = -n; j <= n; ++j)
      if (p.less(pick, j)) --indeg[static_cast<std::size_t>(j + n)];
  }
  return order;
}

void ordinary_rec(const Poset& p, const std::vector<int>& order, std::size_t depth, long lo,
                  long hi, std::vector<long>& f,
                  const std::function<void(const std::vector<long>&)>& emit) {
  if (depth == order.size()) {
    emit(f);
    return;
  }
  const int v = order[depth];
  long floor_v = lo;
  // only already-assigned labels can sit below v in the chosen order
  for (std::size_t t = 0; t < depth; ++t) {
    const int u = order[t];
    if (p.less(u, v)) {
      long bound = f[static_cast<std::size_t>(u)] + (u > v ? 1 : 0);
      floor_v = std::max(floor_v, bound);
    }
  }
  for (long value = floor_v; value <= hi; ++value) {
    f[static_cast<std::size_t>(v)] = value;
    ordinary_rec(p, order, depth + 1, lo, hi, f, emit);
  }
}

// Full-map value of a label under the partial assignment (labels <= 0 included).
long full_value(const std::vector<long>& f, int label) {
  if (label == 0) return 0;
  return label > 0 ? f[static_cast<std::size_t>(label)] : -f[static_cast<std::size_t>(-label)];
}

struct BConstraint {
  int lo_label;  // lo <_P hi
  int hi_label;
  bool strict;   // lo > hi in Z
};

void b_rec(const std::vector<std::vector<BConstraint>>& activated, const std::vector<int>& order,
           std::size_t depth, long k, bool augmented, std::vector<long>& f,
           const std::function<void(const std::vector<long>&)>& emit) {
  if (depth == order.size()) {
    emit(f);
    return;
  }
  const int a = order[depth];
  const long top = augmented ? k - 1 : k;
  for (long value = -k; value <= top; ++value) {
    f[static_cast<std::size_t>(a)] = value;
    bool ok = true;
    for (const auto& c : activated[depth]) {
      long lo = full_value(f, c.lo_label);
      long hi = full_value(f, c.hi_label);
      if (c.strict ? lo >= hi : lo > hi) {
        ok = false;
        break;
      }
    }
    if (ok) b_rec(activated, order, depth + 1, k, augmented, f, emit);
  }
}

} // namespace

void for_each_ordinary_partition(const Poset& p, long lo, long hi,
                                 const std::function<void(const std::vector<long>&)>& emit) {
  if (hi < lo) return;
  check_work_limit(hi - lo + 1, p.size());
  auto order = topo_order(p);
  std::vector<long> f(static_cast<std::size_t>(p.size()) + 1, 0);
  ordinary_rec(p, order, 0, lo, hi, f, emit);
}

void for_each_b_partition(const BPoset& p, long k, PartitionFlavor flavor,
                          const std::function<void(const std::vector<long>&)>& emit) {
  if (flavor == PartitionFlavor::Ordinary)
    throw DomainError("ordinary flavor does not apply to a type B poset");
  if (k < 0) return;
  const int n = p.size();
  check_work_limit(2 * k + 1, n);
  auto order = b_assignment_order(p);

  // position (in assignment order) after which each abs label is known
  std::vector<std::size_t> known_at(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t t = 0; t < order.size(); ++t) known_at[static_cast<std::size_t>(order[t])] = t;
  // constraints grouped by the depth at which both endpoints are determined
  std::vector<std::vector<BConstraint>> activated(order.size());
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (!p.less(i, j)) continue;
      if (i == 0 && j == 0) continue;
      std::size_t when = 0;
      if (i != 0) when = std::max(when, known_at[static_cast<std::size_t>(std::abs(i))]);
      if (j != 0) when = std::max(when, known_at[static_cast<std::size_t>(std::abs(j))]);
      activated[when].push_back({i, j, i > j});
    }

  std::vector<long> f(static_cast<std::size_t>(n) + 1, 0);
  b_rec(activated, order, 0, k, flavor == PartitionFlavor::Augmented, f, emit);
}

bool is_ordinary_partition(const Poset& p, const std::vector<long>& f) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!p.less(i, j)) continue;
      long a = f[static_cast<std::size_t>(i)];
      long b = f[static_cast<std::size_t>(j)];
      if (i > j ? a >= b : a > b) return false;
    }
  return true;
}

bool is_b_partition(const BPoset& p, const std::vector<long>& f, PartitionFlavor flavor, long k) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    long v = f[static_cast<std::size_t>(i)];
    if (v < -k || v > k) return false;
    if (flavor == PartitionFlavor::Augmented && v >= k) return false;
  }
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (!p.less(i, j)) continue;
      long a = full_value(f, i);
      long b = full_value(f, j);
      if (i > j ? a >= b : a > b) return false;
    }
  return true;
}

Integer count_partitions(const Poset& p, long k) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  unsigned long count = 0;
  for_each_ordinary_partition(p, 1, k, [&](const std::vector<long>&) { ++count; });
  return Integer(count);
}

Integer count_partitions(const BPoset& p, long k, PartitionFlavor flavor) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  unsigned long count = 0;
  for_each_b_partition(p, k, flavor, [&](const std::vector<long>&) { ++count; });
  return Integer(count);
}

QPolynomial q_count_partitions(const Poset& p, long k) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  QPolynomial total;
  for_each_ordinary_partition(p, 0, k - 1, [&](const std::vector<long>& f) {
    long weight = 0;
    for (int i = 1; i <= p.size(); ++i) weight += f[static_cast<std::size_t>(i)];
    total.add_term(weight, Rational(1));
  });
  return total;
}

QPolynomial q_count_partitions(const BPoset& p, long k, PartitionFlavor flavor) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  QPolynomial total;
  for_each_b_partition(p, k, flavor, [&](const std::vector<long>& f) {
    long weight = 0;
    for (int i = 1; i <= p.size(); ++i) weight += std::labs(f[static_cast<std::size_t>(i)]);
    total.add_term(weight, Rational(1));
  });
  return total;
}

Integer order_poly_closed(const Permutation& pi, long k) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  const auto rec = descent_stats(pi);
  return binomial(k + pi.size() - 1 - rec.des, static_cast<unsigned long>(pi.size()));
}

Integer order_poly_closed(const SignedPermutation& pi, long k, PartitionFlavor flavor) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  const auto rec = signed_descent_stats(pi);
  const int stat = flavor == PartitionFlavor::Augmented ? rec.ades
                   : flavor == PartitionFlavor::TypeB
                       ? rec.des
                       : throw DomainError("signed permutations take the typeb or aug flavor");
  return binomial(k + pi.size() - stat, static_cast<unsigned long>(pi.size()));
}

QPolynomial q_order_poly_closed(const Permutation& pi, long k) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  const auto rec = descent_stats(pi);
  long top = k + pi.size() - 1 - rec.des;
  if (top < pi.size()) return QPolynomial();
  QPolynomial qb = qbinomial(static_cast<unsigned long>(top), static_cast<unsigned long>(pi.size()));
  QPolynomial out;
  for (const auto& [e, c] : qb.terms()) out.add_term(e + rec.comaj, c);
  return out;
}

QPolynomial q_order_poly_closed(const SignedPermutation& pi, long k, PartitionFlavor flavor) {
  if (k < 1) throw DomainError("order polynomial needs k >= 1");
  const auto rec = signed_descent_stats(pi);
  const bool aug = flavor == PartitionFlavor::Augmented;
  if (!aug && flavor != PartitionFlavor::TypeB)
    throw DomainError("signed permutations take the typeb or aug flavor");
  const int stat = aug ? rec.ades : rec.des;
  const long shift = aug ? rec.acomaj : rec.comaj;
  long top = k + pi.size() - stat;
  if (top < pi.size()) return QPolynomial();
  QPolynomial qb = qbinomial(static_cast<unsigned long>(top), static_cast<unsigned long>(pi.size()));
  QPolynomial out;
  for (const auto& [e, c] : qb.terms()) out.add_term(e + shift, c);
  return out;
}

} // namespace descents
