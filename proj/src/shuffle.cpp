#include "descents/shuffle.hpp"

#include "descents/errors.hpp"
#include "descents/structure.hpp"

#include <map>

namespace descents {

ShuffleDistribution a_shuffle_distribution(int n, long a) {
  if (a < 1) throw DomainError("shuffle parameter must be >= 1");
  RationalElement raw = structure_poly_eval(n, StructureKind::TypeA, Rational(a), true);
  Rational scale(1);
  for (int i = 0; i < n; ++i) scale /= a;
  return {n, a, raw.scaled(scale)};
}

ShuffleDistribution repeated_shuffle(int n, int m) {
  if (m < 1) throw DomainError("shuffle count must be >= 1");
  if (m > 60) throw CapacityError("shuffle count too large for the 2^m parameter");
  return a_shuffle_distribution(n, 1L << m);
}

ShuffleDistribution gsr_oracle(int n, long a) {
  if (a < 1) throw DomainError("shuffle parameter must be >= 1");
  double raw = 1;
  for (int i = 0; i < n; ++i) raw *= static_cast<double>(a);
  if (raw > static_cast<double>(kShuffleWorkLimit))
    throw CapacityError("a^n digit words exceed the oracle work limit");
  (void)enumerate_symmetric(n);  // rank guardrail applies here too

  long words = 1;
  for (int i = 0; i < n; ++i) words *= a;

  std::map<PermKey, long> counts;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> sorted;
  sorted.reserve(static_cast<std::size_t>(n));
  std::vector<int> arrangement(static_cast<std::size_t>(n), 0);
  for (long w = 0; w < words; ++w) {
    // stable sort of deck positions 1..n by digit = the inverse shuffle;
    // the forward shuffle with the same digit word is its inverse, which
    // is the arrangement the bar structure polynomial describes
    sorted.clear();
    for (int d = 0; d < a; ++d)
      for (int i = 0; i < n; ++i)
        if (digits[static_cast<std::size_t>(i)] == d) sorted.push_back(i + 1);
    for (int j = 0; j < n; ++j)
      arrangement[static_cast<std::size_t>(sorted[static_cast<std::size_t>(j)]) - 1] = j + 1;
    ++counts[pack_window(arrangement)];
    // next digit word (mixed-radix increment)
    for (int i = 0; i < n; ++i) {
      if (++digits[static_cast<std::size_t>(i)] < a) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }

  RationalElement probs(GroupKind::A, n);
  for (const auto& [key, count] : counts) {
    Rational p(count, words);
    p.canonicalize();
    probs.add_term_key(key, p);
  }
  return {n, a, std::move(probs)};
}

ShuffleDistribution uniform_distribution(int n) {
  RationalElement probs(GroupKind::A, n);
  Rational p(1, factorial(n));
  p.canonicalize();
  for (const auto& pi : enumerate_symmetric(n)) probs.add_term(pi.window(), p);
  return {n, 0, std::move(probs)};
}

ShuffleDistribution convolve(const ShuffleDistribution& d1, const ShuffleDistribution& d2) {
  if (d1.n != d2.n) throw DomainError("distributions on different decks");
  return {d1.n, 0, convolve(d1.probabilities, d2.probabilities)};
}

Rational total_variation(const ShuffleDistribution& d1, const ShuffleDistribution& d2) {
  if (d1.n != d2.n) throw DomainError("distributions on different decks");
  Rational sum = 0;
  auto it1 = d1.probabilities.terms().begin(), end1 = d1.probabilities.terms().end();
  auto it2 = d2.probabilities.terms().begin(), end2 = d2.probabilities.terms().end();
  while (it1 != end1 || it2 != end2) {
    if (it2 == end2 || (it1 != end1 && it1->first < it2->first)) {
      sum += abs(it1->second);
      ++it1;
    } else if (it1 == end1 || it2->first < it1->first) {
      sum += abs(it2->second);
      ++it2;
    } else {
      sum += abs(it1->second - it2->second);
      ++it1;
      ++it2;
    }
  }
  return sum / 2;
}

} // namespace descents
