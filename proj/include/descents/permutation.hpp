#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace descents {

enum class GroupKind { A, B };

// Enumeration guardrails; the CLI can lift them with --force.
inline constexpr int kMaxRankA = 8;
inline constexpr int kMaxRankB = 6;
// Hard cap imposed by the packed window encoding (5 bits per entry).
inline constexpr int kMaxPackedRank = 12;

// Permutation of [n] in one-line notation. Composition convention throughout
// the library: (a∘b)(i) = a(b(i)).
class Permutation {
public:
  explicit Permutation(std::vector<int> window);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  // image of i, 1-based
  int operator()(int i) const { return window_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& window() const { return window_; }

  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return window_ == other.window_; }
  bool operator<(const Permutation& other) const { return window_ < other.window_; }

private:
  struct unchecked_tag {};
  Permutation(std::vector<int> window, unchecked_tag) : window_(std::move(window)) {}
  std::vector<int> window_;
};

// Signed permutation of ±[n]: window holds π(1..n), the rest of the map is
// forced by π(-s) = -π(s) and π(0) = 0.
class SignedPermutation {
public:
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  int operator()(int i) const { return window_[static_cast<std::size_t>(i) - 1]; }
  // full map on ±[n] ∪ {0}
  int apply(int v) const;
  const std::vector<int>& window() const { return window_; }

  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation& other) const { return window_ == other.window_; }
  bool operator<(const SignedPermutation& other) const { return window_ < other.window_; }

private:
  struct unchecked_tag {};
  SignedPermutation(std::vector<int> window, unchecked_tag) : window_(std::move(window)) {}
  std::vector<int> window_;
};

struct DescentRecord {
  std::vector<int> des_set;   // positions in [n-1] with π(i) > π(i+1)
  std::vector<int> cdes_set;  // des_set plus n when π(n) > π(1)
  int des = 0;
  int cdes = 0;
  long comaj = 0;  // sum over descents d of (n - d)
  long maj = 0;    // sum of descent positions
};

struct SignedDescentRecord {
  std::vector<int> des_set;   // positions in {0..n-1}, with π(0) = 0
  std::vector<int> ades_set;  // des_set plus n when π(n) > 0
  int des = 0;
  int ades = 0;
  long comaj = 0;   // sum over s=1..n of #{d in des_set : d < s}
  long acomaj = 0;  // same count against ades_set
};

DescentRecord descent_stats(const Permutation& pi);
SignedDescentRecord signed_descent_stats(const SignedPermutation& pi);

// π of [n-1] extended by the fixed point n; cdes of the result is des(π)+1.
Permutation append_fixed_max(const Permutation& pi);

// The n-cycle ω with ω(i) = i+1 and ω(n) = 1.
Permutation rotation(int n);

// {σ∘ω^i : i = 0..n-1}; all n elements share σ's cyclic descent number.
std::vector<Permutation> cyclic_class(const Permutation& sigma);

// Exhaustive enumeration, lexicographic on windows. Throws CapacityError
// above the rank guardrail unless force is set.
std::vector<Permutation> enumerate_symmetric(int n, bool force = false);
std::vector<SignedPermutation> enumerate_hyperoctahedral(int n, bool force = false);

// Lifts the rank guardrails process-wide. Meant to be flipped once, by the
// CLI's --force flag, before any computation starts.
void set_enumeration_force(bool force);

long factorial(int n);
long group_order(GroupKind kind, int n);  // n! or 2^n n!

// Text notation: "2,3,1" (type A), "-2,1" (type B). Rejects duplicates,
// zeros, and out-of-range entries with ParseError.
std::vector<int> parse_window(const std::string& text);
Permutation parse_permutation(const std::string& text);
SignedPermutation parse_signed_permutation(const std::string& text);
std::string format_window(std::span<const int> window);

// Packed window encoding used as the canonical group-algebra key. Entries are
// mapped monotonically into 5-bit fields, most significant first, so numeric
// key order equals lexicographic window order at fixed n.
using PermKey = std::uint64_t;
PermKey pack_window(std::span<const int> window);
std::vector<int> unpack_window(PermKey key, int n);

} // namespace descents
