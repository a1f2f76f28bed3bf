#include "descents/permutation.hpp"

#include "descents/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace descents {

namespace {

std::atomic<bool> g_force{false};

void check_window_a(const std::vector<int>& w) {
  if (w.empty()) throw DomainError("permutation window must be nonempty");
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1)
      throw DomainError("window is not a permutation of [n]: " + format_window(w));
}

void check_window_b(const std::vector<int>& w) {
  if (w.empty()) throw DomainError("signed permutation window must be nonempty");
  std::vector<int> sorted(w.size());
  std::transform(w.begin(), w.end(), sorted.begin(), [](int v) { return std::abs(v); });
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1)
      throw DomainError("window is not a signed permutation of ±[n]: " + format_window(w));
}

} // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  check_window_a(window_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), unchecked_tag{});
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw DomainError("compose: size mismatch (" + std::to_string(size()) + " vs " +
                      std::to_string(other.size()) + ")");
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = window_[static_cast<std::size_t>(other.window_[i]) - 1];
  return Permutation(std::move(w), unchecked_tag{});
}

Permutation Permutation::inverse() const {
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[static_cast<std::size_t>(window_[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(w), unchecked_tag{});
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_window_b(window_);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w), unchecked_tag{});
}

int SignedPermutation::apply(int v) const {
  if (v == 0) return 0;
  return v > 0 ? window_[static_cast<std::size_t>(v) - 1]
               : -window_[static_cast<std::size_t>(-v) - 1];
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (size() != other.size())
    throw DomainError("compose: size mismatch (" + std::to_string(size()) + " vs " +
                      std::to_string(other.size()) + ")");
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = apply(other.window_[i]);
  return SignedPermutation(std::move(w), unchecked_tag{});
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int v = window_[i];
    if (v > 0)
      w[static_cast<std::size_t>(v) - 1] = static_cast<int>(i) + 1;
    else
      w[static_cast<std::size_t>(-v) - 1] = -(static_cast<int>(i) + 1);
  }
  return SignedPermutation(std::move(w), unchecked_tag{});
}

DescentRecord descent_stats(const Permutation& pi) {
  const auto& w = pi.window();
  const int n = pi.size();
  DescentRecord rec;
  for (int i = 1; i < n; ++i)
    if (w[static_cast<std::size_t>(i) - 1] > w[static_cast<std::size_t>(i)])
      rec.des_set.push_back(i);
  rec.cdes_set = rec.des_set;
  if (n >= 2 && w[static_cast<std::size_t>(n) - 1] > w[0]) rec.cdes_set.push_back(n);
  rec.des = static_cast<int>(rec.des_set.size());
  rec.cdes = static_cast<int>(rec.cdes_set.size());
  for (int d : rec.des_set) {
    rec.comaj += n - d;
    rec.maj += d;
  }
  return rec;
}

SignedDescentRecord signed_descent_stats(const SignedPermutation& pi) {
  const auto& w = pi.window();
  const int n = pi.size();
  SignedDescentRecord rec;
  if (w[0] < 0) rec.des_set.push_back(0);  // π(0) = 0 > π(1)
  for (int i = 1; i < n; ++i)
    if (w[static_cast<std::size_t>(i) - 1] > w[static_cast<std::size_t>(i)])
      rec.des_set.push_back(i);
  rec.ades_set = rec.des_set;
  if (w[static_cast<std::size_t>(n) - 1] > 0) rec.ades_set.push_back(n);
  rec.des = static_cast<int>(rec.des_set.size());
  rec.ades = static_cast<int>(rec.ades_set.size());
  for (int d : rec.des_set) rec.comaj += n - d;
  for (int d : rec.ades_set)
    if (d < n) rec.acomaj += n - d;
  return rec;
}

Permutation append_fixed_max(const Permutation& pi) {
  std::vector<int> w = pi.window();
  w.push_back(pi.size() + 1);
  return Permutation(std::move(w));
}

Permutation rotation(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return Permutation(std::move(w));
}

std::vector<Permutation> cyclic_class(const Permutation& sigma) {
  const Permutation omega = rotation(sigma.size());
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(sigma.size()));
  Permutation current = sigma;
  for (int i = 0; i < sigma.size(); ++i) {
    out.push_back(current);
    current = current.compose(omega);
  }
  return out;
}

long factorial(int n) {
  long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

long group_order(GroupKind kind, int n) {
  long out = factorial(n);
  if (kind == GroupKind::B) out <<= n;
  return out;
}

std::vector<Permutation> enumerate_symmetric(int n, bool force) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (n > kMaxPackedRank)
    throw CapacityError("rank " + std::to_string(n) + " exceeds the hard cap " +
                        std::to_string(kMaxPackedRank));
  if (n > kMaxRankA && !force && !g_force.load(std::memory_order_relaxed))
    throw CapacityError("S_" + std::to_string(n) + " enumeration exceeds the guardrail n <= " +
                        std::to_string(kMaxRankA) + " (use --force to override)");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

void enumerate_b_rec(int n, std::vector<int>& prefix, std::vector<bool>& used,
                     std::vector<SignedPermutation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(SignedPermutation(prefix));
    return;
  }
  for (int v = -n; v <= n; ++v) {
    if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
    used[static_cast<std::size_t>(std::abs(v))] = true;
    prefix.push_back(v);
    enumerate_b_rec(n, prefix, used, out);
    prefix.pop_back();
    used[static_cast<std::size_t>(std::abs(v))] = false;
  }
}

} // namespace

std::vector<SignedPermutation> enumerate_hyperoctahedral(int n, bool force) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (n > kMaxPackedRank)
    throw CapacityError("rank " + std::to_string(n) + " exceeds the hard cap " +
                        std::to_string(kMaxPackedRank));
  if (n > kMaxRankB && !force && !g_force.load(std::memory_order_relaxed))
    throw CapacityError("B_" + std::to_string(n) + " enumeration exceeds the guardrail n <= " +
                        std::to_string(kMaxRankB) + " (use --force to override)");
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(group_order(GroupKind::B, n)));
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  enumerate_b_rec(n, prefix, used, out);
  return out;
}

void set_enumeration_force(bool force) { g_force.store(force, std::memory_order_relaxed); }

std::vector<int> parse_window(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad window entry '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw ParseError("bad window entry '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("empty window");
  return out;
}

Permutation parse_permutation(const std::string& text) {
  auto w = parse_window(text);
  try {
    return Permutation(std::move(w));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  auto w = parse_window(text);
  try {
    return SignedPermutation(std::move(w));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_window(std::span<const int> window) {
  std::string out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window[i]);
  }
  return out;
}

PermKey pack_window(std::span<const int> window) {
  PermKey key = 0;
  for (int v : window) key = (key << 5) | static_cast<PermKey>(v + 16);
  return key;
}

std::vector<int> unpack_window(PermKey key, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(key & 0x1f) - 16;
    key >>= 5;
  }
  return w;
}

} // namespace descents
