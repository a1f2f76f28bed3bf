#pragma once

#include "descents/permutation.hpp"

#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

namespace descents {

// Finite poset labeled by [n]; stores the full reachability relation
// (transitive closure of the covers it was built from).
class Poset {
public:
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
  static Poset antichain(int n);

  int size() const { return n_; }
  bool less(int i, int j) const {  // i <_P j, labels 1-based
    return less_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j - 1)];
  }
  // transitive reduction, sorted
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const Poset& other) const { return n_ == other.n_ && less_ == other.less_; }

private:
  Poset(int n) : n_(n), less_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false) {}
  void set_less(int i, int j) {
    less_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
          static_cast<std::size_t>(j - 1)] = true;
  }
  int n_;
  std::vector<bool> less_;
};

// Poset on {-n,...,0,...,n} closed under negation: i <_P j forces -j <_P -i.
class BPoset {
public:
  // covers are automatically mirrored before taking the closure
  static BPoset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
  static BPoset antichain(int n);

  int size() const { return n_; }
  bool less(int i, int j) const {
    return less_[index(i) * static_cast<std::size_t>(2 * n_ + 1) + index(j)];
  }
  // canonical half of the transitive reduction (mirrors omitted), sorted
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const BPoset& other) const { return n_ == other.n_ && less_ == other.less_; }

private:
  BPoset(int n)
      : n_(n), less_(static_cast<std::size_t>(2 * n + 1) * static_cast<std::size_t>(2 * n + 1),
                     false) {}
  std::size_t index(int v) const { return static_cast<std::size_t>(v + n_); }
  void set_less(int i, int j) {
    less_[index(i) * static_cast<std::size_t>(2 * n_ + 1) + index(j)] = true;
  }
  int n_;
  std::vector<bool> less_;
};

// Chain labeled π(1)..π(n) with downward zigs exactly at positions in I;
// its linear extensions are the σ with Des(σ⁻¹π) = I.
Poset zigzag(const Permutation& pi, const std::vector<int>& zig_positions);

// The total order of π (all steps upward); its unique extension is π.
Poset chain_poset(const Permutation& pi);

enum class BZigzagFlavor { TypeB, Augmented };

// Type B zig-zag chain 0=π(0),π(1),...,π(n)(,0 again for the augmented
// flavor), mirrored by negation. Augmented flavor rejects I empty or full.
BPoset zigzag_b(const SignedPermutation& pi, const std::vector<int>& zig_positions,
                BZigzagFlavor flavor);

BPoset chain_bposet(const SignedPermutation& pi);

// All linear extensions, lexicographic on windows. Observation used for the
// membership test: σ extends P iff i <_P j implies σ⁻¹(i) < σ⁻¹(j).
std::vector<Permutation> linear_extensions(const Poset& p);
std::vector<SignedPermutation> linear_extensions(const BPoset& p);

// Text format:
//   poset A <n>      (or: poset B <n>)
//   a < b            (one cover per line; B files list one relation per
//                     mirror pair; '#' starts a comment)
std::variant<Poset, BPoset> parse_poset(std::istream& in);
std::variant<Poset, BPoset> parse_poset_text(const std::string& text);
std::string print_poset(const Poset& p);
std::string print_poset(const BPoset& p);

} // namespace descents
