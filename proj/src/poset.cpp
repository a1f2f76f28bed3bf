#include "descents/poset.hpp"

#include "descents/errors.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>

namespace descents {

namespace {

// Warshall closure over an n×n boolean relation. Returns one offending
// (i,j) index pair if the closed relation fails antisymmetry/irreflexivity.
std::optional<std::pair<int, int>> close_relation(std::vector<bool>& rel, int n) {
  const auto at = [&](int i, int j) -> std::vector<bool>::reference {
    return rel[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j)];
  };
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      if (at(i, m))
        for (int j = 0; j < n; ++j)
          if (at(m, j)) at(i, j) = true;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (at(i, j) && at(j, i)) return std::pair(i, j);
  return std::nullopt;
}

std::vector<std::pair<int, int>> reduction(int count, const std::vector<bool>& rel) {
  const auto at = [&](int i, int j) {
    return rel[static_cast<std::size_t>(i) * static_cast<std::size_t>(count) +
               static_cast<std::size_t>(j)];
  };
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!at(i, j)) continue;
      bool covered = false;
      for (int m = 0; m < count && !covered; ++m) covered = at(i, m) && at(m, j);
      if (!covered) out.emplace_back(i, j);
    }
  return out;
}

} // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1) throw DomainError("poset size must be >= 1");
  Poset p(n);
  for (auto [a, b] : covers) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw DomainError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside [" + std::to_string(n) + "]");
    if (a == b)
      throw PosetInconsistency("reflexive cover (" + std::to_string(a) + " < " +
                               std::to_string(b) + ")");
    p.set_less(a, b);
  }
  if (auto bad = close_relation(p.less_, n))
    throw PosetInconsistency("cover set is cyclic: closure relates " +
                             std::to_string(bad->first + 1) + " and " +
                             std::to_string(bad->second + 1) + " both ways");
  return p;
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

std::vector<std::pair<int, int>> Poset::covers() const {
  auto raw = reduction(n_, less_);
  std::vector<std::pair<int, int>> out;
  out.reserve(raw.size());
  for (auto [i, j] : raw) out.emplace_back(i + 1, j + 1);
  std::sort(out.begin(), out.end());
  return out;
}

BPoset BPoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1) throw DomainError("poset size must be >= 1");
  BPoset p(n);
  for (auto [a, b] : covers) {
    if (a < -n || a > n || b < -n || b > n)
      throw DomainError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside ±[" + std::to_string(n) + "]");
    if (a == b)
      throw PosetInconsistency("reflexive cover (" + std::to_string(a) + " < " +
                               std::to_string(b) + ")");
    p.set_less(a, b);
    p.set_less(-b, -a);
  }
  if (auto bad = close_relation(p.less_, 2 * n + 1))
    throw PosetInconsistency("mirrored closure is cyclic: closure relates " +
                             std::to_string(bad->first - n) + " and " +
                             std::to_string(bad->second - n) + " both ways");
  return p;
}

BPoset BPoset::antichain(int n) { return from_covers(n, {}); }

std::vector<std::pair<int, int>> BPoset::covers() const {
  auto raw = reduction(2 * n_ + 1, less_);
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : raw) {
    int a = i - n_;
    int b = j - n_;
    // keep the lexicographically smaller of (a,b) and its mirror (-b,-a)
    if (std::pair(a, b) <= std::pair(-b, -a)) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset zigzag(const Permutation& pi, const std::vector<int>& zig_positions) {
  const int n = pi.size();
  std::vector<bool> zig(static_cast<std::size_t>(n), false);
  for (int s : zig_positions) {
    if (s < 1 || s > n - 1)
      throw DomainError("zig position " + std::to_string(s) + " outside [n-1]");
    zig[static_cast<std::size_t>(s)] = true;
  }
  std::vector<std::pair<int, int>> covers;
  for (int s = 1; s < n; ++s) {
    if (zig[static_cast<std::size_t>(s)])
      covers.emplace_back(pi(s + 1), pi(s));
    else
      covers.emplace_back(pi(s), pi(s + 1));
  }
  return Poset::from_covers(n, covers);
}

Poset chain_poset(const Permutation& pi) { return zigzag(pi, {}); }

BPoset zigzag_b(const SignedPermutation& pi, const std::vector<int>& zig_positions,
                BZigzagFlavor flavor) {
  const int n = pi.size();
  const int last = flavor == BZigzagFlavor::Augmented ? n : n - 1;
  std::vector<bool> zig(static_cast<std::size_t>(last) + 1, false);
  for (int s : zig_positions) {
    if (s < 0 || s > last)
      throw DomainError("zig position " + std::to_string(s) + " outside {0.." +
                        std::to_string(last) + "}");
    zig[static_cast<std::size_t>(s)] = true;
  }
  if (flavor == BZigzagFlavor::Augmented) {
    const auto count = static_cast<std::size_t>(std::count(zig.begin(), zig.end(), true));
    if (count == 0 || count == zig.size())
      throw DomainError("augmented zig-zag requires a set of zig positions that is "
                        "neither empty nor all of {0..n}");
  }
  // chain 0, π(1), ..., π(n), and back to 0 for the augmented flavor
  const auto node = [&](int s) { return s == 0 || s == n + 1 ? 0 : pi(s); };
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s <= last; ++s) {
    int lo = node(s), hi = node(s + 1);
    if (zig[static_cast<std::size_t>(s)])
      covers.emplace_back(hi, lo);
    else
      covers.emplace_back(lo, hi);
  }
  return BPoset::from_covers(n, covers);
}

BPoset chain_bposet(const SignedPermutation& pi) { return zigzag_b(pi, {}, BZigzagFlavor::TypeB); }

std::vector<Permutation> linear_extensions(const Poset& p) {
  const int n = p.size();
  std::vector<Permutation> out;
  for (const auto& sigma : enumerate_symmetric(n)) {
    const Permutation inv = sigma.inverse();
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        if (p.less(i, j) && inv(i) >= inv(j)) ok = false;
    if (ok) out.push_back(sigma);
  }
  return out;
}

std::vector<SignedPermutation> linear_extensions(const BPoset& p) {
  const int n = p.size();
  std::vector<SignedPermutation> out;
  for (const auto& sigma : enumerate_hyperoctahedral(n)) {
    const SignedPermutation inv = sigma.inverse();
    bool ok = true;
    for (int i = -n; i <= n && ok; ++i)
      for (int j = -n; j <= n && ok; ++j)
        if (p.less(i, j) && inv.apply(i) >= inv.apply(j)) ok = false;
    if (ok) out.push_back(sigma);
  }
  return out;
}

namespace {

std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string token;
    if (probe >> token) lines.push_back(line);
  }
  return lines;
}

std::pair<int, int> parse_cover_line(const std::string& line) {
  std::istringstream in(line);
  int a = 0, b = 0;
  std::string rel;
  if (!(in >> a >> rel >> b) || rel != "<")
    throw ParseError("bad cover line: '" + line + "' (expected 'a < b')");
  std::string extra;
  if (in >> extra) throw ParseError("trailing tokens on cover line: '" + line + "'");
  return {a, b};
}

} // namespace

std::variant<Poset, BPoset> parse_poset(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError("empty poset file");
  std::istringstream header(lines.front());
  std::string word, kind;
  int n = 0;
  if (!(header >> word >> kind >> n) || word != "poset" || (kind != "A" && kind != "B") || n < 1)
    throw ParseError("bad poset header: '" + lines.front() + "' (expected 'poset A|B <n>')");
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) covers.push_back(parse_cover_line(lines[i]));
  if (kind == "A") return Poset::from_covers(n, covers);
  return BPoset::from_covers(n, covers);
}

std::variant<Poset, BPoset> parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string print_poset(const Poset& p) {
  std::string out = "poset A " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

std::string print_poset(const BPoset& p) {
  std::string out = "poset B " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

} // namespace descents
