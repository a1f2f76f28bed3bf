#pragma once

#include "descents/poset.hpp"
#include "descents/qpolynomial.hpp"
#include "descents/rational.hpp"

#include <functional>
#include <vector>

namespace descents {

enum class PartitionFlavor { Ordinary, TypeB, Augmented };

// Oracles refuse instances with more raw (pre-pruning) assignments than this.
inline constexpr unsigned long long kOracleWorkLimit = 100'000'000ULL;

// Enumerates order-preserving labelings f of P (strict where the poset goes
// against the integer order of the labels) with values in {lo..hi}. The
// callback sees f indexed by label: f[i] for i in 1..n, f[0] unused.
// Assignment runs along one linear extension of P and prunes early.
void for_each_ordinary_partition(const Poset& p, long lo, long hi,
                                 const std::function<void(const std::vector<long>&)>& emit);

// Type B / augmented labelings with f(-i) = -f(i) and f(0) = 0, values of
// f(i) in {-k..k} (type B) or {-k..k-1} for positive labels (augmented,
// realizing the top scale element as k). Callback sees f[i] for i in 1..n.
void for_each_b_partition(const BPoset& p, long k, PartitionFlavor flavor,
                          const std::function<void(const std::vector<long>&)>& emit);

// Membership tests used by the fundamental-theorem checks.
bool is_ordinary_partition(const Poset& p, const std::vector<long>& f);
bool is_b_partition(const BPoset& p, const std::vector<long>& f, PartitionFlavor flavor, long k);

// Order polynomials by exhaustive enumeration; the independent oracle the
// closed forms are tested against. Ordinary flavor counts into {1..k}.
Integer count_partitions(const Poset& p, long k);
Integer count_partitions(const BPoset& p, long k, PartitionFlavor flavor);

// q-weighted oracles. Ordinary flavor uses the scale {0..k-1} and weight
// q^(Σ f(i)); the B flavors use {0..k} chain values, i.e. weight q^(Σ |f(i)|).
QPolynomial q_count_partitions(const Poset& p, long k);
QPolynomial q_count_partitions(const BPoset& p, long k, PartitionFlavor flavor);

// Binomial closed forms for the chain of a (signed) permutation.
Integer order_poly_closed(const Permutation& pi, long k);
Integer order_poly_closed(const SignedPermutation& pi, long k, PartitionFlavor flavor);
QPolynomial q_order_poly_closed(const Permutation& pi, long k);
QPolynomial q_order_poly_closed(const SignedPermutation& pi, long k, PartitionFlavor flavor);

} // namespace descents
