#pragma once

#include "descents/group_algebra.hpp"

namespace descents {

// gsr_oracle refuses instances with more digit words than this.
inline constexpr unsigned long long kShuffleWorkLimit = 100'000'000ULL;

// Exact probability distribution on S_n arising from riffle shuffling.
// packets == 0 marks distributions not produced by a single a-shuffle
// (uniform, convolutions).
struct ShuffleDistribution {
  int n = 0;
  long packets = 0;
  RationalElement probabilities;

  ShuffleDistribution(int n_, long packets_, RationalElement probs)
      : n(n_), packets(packets_), probabilities(std::move(probs)) {}
};

// Distribution of a single a-shuffle: the bar structure polynomial at x=a,
// normalized by a^n. The coefficient of π is C(a+n-1-des(π⁻¹), n)/a^n.
ShuffleDistribution a_shuffle_distribution(int n, long a);

// Distribution after m independent 2-shuffles, via the closed form 2^m.
ShuffleDistribution repeated_shuffle(int n, int m);

// Independent oracle: enumerates all a^n digit words, applies the inverse
// a-shuffle (stable sort of deck positions by digit) to the identity deck,
// and tallies the forward arrangement of each word (the inverse of the sort
// order; first visible difference from the sort order itself is n=4, where
// descents of a permutation and its inverse part ways). Shares no code with
// structure_poly_eval.
ShuffleDistribution gsr_oracle(int n, long a);

ShuffleDistribution uniform_distribution(int n);

ShuffleDistribution convolve(const ShuffleDistribution& d1, const ShuffleDistribution& d2);

// (1/2)·Σ_π |d1[π] - d2[π]|, exact.
Rational total_variation(const ShuffleDistribution& d1, const ShuffleDistribution& d2);

} // namespace descents
