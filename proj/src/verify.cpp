#include "descents/verify.hpp"

#include "descents/errors.hpp"
#include "descents/shuffle.hpp"

#include <chrono>
#include <future>
#include <random>

namespace descents {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string coeff_string(const Rational& c) { return rational_to_string(c); }
std::string coeff_string(const QPolynomial& c) { return c.to_string(); }

// First differing coefficient in canonical (window-lexicographic) order.
template <class Coeff>
std::optional<Counterexample> first_difference(const GroupAlgebraElement<Coeff>& lhs,
                                               const GroupAlgebraElement<Coeff>& rhs) {
  auto itl = lhs.terms().begin(), endl_ = lhs.terms().end();
  auto itr = rhs.terms().begin(), endr = rhs.terms().end();
  const auto make = [&](PermKey key, const Coeff* cl, const Coeff* cr) {
    Counterexample ce;
    ce.perm = unpack_window(key, lhs.rank());
    ce.lhs = cl ? coeff_string(*cl) : "0";
    ce.rhs = cr ? coeff_string(*cr) : "0";
    return ce;
  };
  while (itl != endl_ || itr != endr) {
    if (itr == endr || (itl != endl_ && itl->first < itr->first))
      return make(itl->first, &itl->second, nullptr);
    if (itl == endl_ || itr->first < itl->first) return make(itr->first, nullptr, &itr->second);
    if (!(itl->second == itr->second)) return make(itl->first, &itl->second, &itr->second);
    ++itl;
    ++itr;
  }
  return std::nullopt;
}

const char* law_name(ProductLaw law) {
  switch (law) {
    case ProductLaw::XY: return "xy";
    case ProductLaw::TwoXYPlusXPlusY: return "2xy+x+y";
    case ProductLaw::TwoXY: return "2xy";
    case ProductLaw::TwoXYPlusX: return "2xy+x";
  }
  return "?";
}

QElement substitute_element(const QElement& a, long power) {
  QElement out(a.kind(), a.rank());
  for (const auto& [key, c] : a.terms()) out.add_term_key(key, c.substitute_power(power));
  return out;
}

void fail(VerificationReport& report, Counterexample ce) {
  if (report.pass) {
    report.pass = false;
    report.counterexample = std::move(ce);
  }
}

} // namespace

Rational apply_law(ProductLaw law, const Rational& x, const Rational& y) {
  switch (law) {
    case ProductLaw::XY: return x * y;
    case ProductLaw::TwoXYPlusXPlusY: return 2 * x * y + x + y;
    case ProductLaw::TwoXY: return 2 * x * y;
    case ProductLaw::TwoXYPlusX: return 2 * x * y + x;
  }
  throw DomainError("unknown product law");
}

VerificationReport verify_product_identity(int n, StructureKind lhs_kind, StructureKind rhs_kind,
                                           ProductLaw law, VerifyOptions options) {
  const auto start = Clock::now();
  if (group_of(lhs_kind) != group_of(rhs_kind))
    throw DomainError("product identity factors must live in the same group");
  const StructureKind result_kind = lhs_kind == rhs_kind ? lhs_kind : StructureKind::Augmented;

  VerificationReport report;
  report.identity = std::string(kind_name(lhs_kind)) + "(x)*" + kind_name(rhs_kind) + "(y) = " +
                    kind_name(result_kind) + "(" + law_name(law) + ")";
  report.n = n;

  const int gmax = n + 1;
  std::vector<RationalElement> left, right;
  left.reserve(static_cast<std::size_t>(gmax));
  right.reserve(static_cast<std::size_t>(gmax));
  for (int t = 1; t <= gmax; ++t) {
    left.push_back(structure_poly_eval(n, lhs_kind, Rational(t)));
    right.push_back(structure_poly_eval(n, rhs_kind, Rational(t)));
  }
  for (int x = 1; x <= gmax; ++x)
    for (int y = 1; y <= gmax; ++y) report.grid.push_back({x, y});

  const auto check_point = [&](int index) -> std::optional<Counterexample> {
    const int x = index / gmax + 1;
    const int y = index % gmax + 1;
    const RationalElement product = convolve(left[static_cast<std::size_t>(x - 1)],
                                             right[static_cast<std::size_t>(y - 1)]);
    const RationalElement expected =
        structure_poly_eval(n, result_kind, apply_law(law, Rational(x), Rational(y)));
    auto diff = first_difference(product, expected);
    if (diff) diff->point = {x, y};
    return diff;
  };

  const int points = gmax * gmax;
  const int workers = std::max(1, std::min(options.threads, points));
  if (workers == 1) {
    for (int i = 0; i < points && report.pass; ++i)
      if (auto ce = check_point(i)) fail(report, std::move(*ce));
  } else {
    // strided partition; the first counterexample in row-major order wins
    std::vector<std::future<std::pair<int, std::optional<Counterexample>>>> futures;
    for (int w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (int i = w; i < points; i += workers)
          if (auto ce = check_point(i)) return std::pair(i, std::optional(std::move(*ce)));
        return std::pair(points, std::optional<Counterexample>());
      }));
    int best = points;
    std::optional<Counterexample> best_ce;
    for (auto& f : futures) {
      auto [idx, ce] = f.get();
      if (idx < best && ce) {
        best = idx;
        best_ce = std::move(ce);
      }
    }
    if (best_ce) fail(report, std::move(*best_ce));
  }

  // one rational smoke point (the identity holds as a polynomial identity)
  if (report.pass) {
    std::mt19937 rng(0x1234u + static_cast<unsigned>(n) * 7u +
                     static_cast<unsigned>(lhs_kind) * 31u + static_cast<unsigned>(rhs_kind));
    Rational xq(1 + static_cast<long>(rng() % 7), 2 + static_cast<long>(rng() % 5));
    Rational yq(1 + static_cast<long>(rng() % 7), 2 + static_cast<long>(rng() % 5));
    xq.canonicalize();
    yq.canonicalize();
    const RationalElement product = convolve(structure_poly_eval(n, lhs_kind, xq),
                                             structure_poly_eval(n, rhs_kind, yq));
    const RationalElement expected =
        structure_poly_eval(n, result_kind, apply_law(law, xq, yq));
    if (auto ce = first_difference(product, expected)) {
      ce->note = "rational smoke point x=" + rational_to_string(xq) + " y=" + rational_to_string(yq);
      fail(report, std::move(*ce));
    }
  }

  // bar-variant compatibility at one grid point
  if (report.pass && lhs_kind == rhs_kind &&
      (lhs_kind == StructureKind::TypeA || lhs_kind == StructureKind::TypeB)) {
    const Rational x0(2), y0(3);
    const RationalElement product = convolve(structure_poly_eval(n, lhs_kind, x0, true),
                                             structure_poly_eval(n, rhs_kind, y0, true));
    const RationalElement expected =
        structure_poly_eval(n, result_kind, apply_law(law, x0, y0), true);
    if (auto ce = first_difference(product, expected)) {
      ce->note = "bar variant at (2,3)";
      fail(report, std::move(*ce));
    }
  }

  // idempotent cross-check: families self-verify orthogonality on build
  if (report.pass) {
    try {
      if (lhs_kind == rhs_kind) {
        (void)structure_poly_coeffs(n, lhs_kind);
      } else {
        const IdempotentFamily lhs_family = structure_poly_coeffs(n, lhs_kind);
        const IdempotentFamily rhs_family = structure_poly_coeffs(n, rhs_kind);
        const auto li = lhs_family.indices();
        const auto ri = rhs_family.indices();
        for (int i = li.first; i <= li.last && report.pass; ++i)
          for (int j = ri.first; j <= ri.last && report.pass; ++j) {
            const RationalElement product =
                convolve(lhs_family.member(i), rhs_family.member(j));
            const RationalElement expected = i == j
                                                 ? lhs_family.member(i)
                                                 : RationalElement(group_of(lhs_kind), n);
            if (auto ce = first_difference(product, expected)) {
              ce->point = {i, j};
              ce->note = "ideal relation e^(" + std::string(kind_name(lhs_kind)) + ")_i * e^(" +
                         kind_name(rhs_kind) + ")_j";
              fail(report, std::move(*ce));
            }
          }
      }
    } catch (const InvariantViolation& e) {
      Counterexample ce;
      ce.note = e.what();
      fail(report, std::move(ce));
    }
  }

  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify_eulerian_props(int n) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "eulerian polynomial relations (cyclic = n*ordinary, augmented = 2^n*ordinary)";
  report.n = n;

  if (n >= 2) {
    const auto cyclic = eulerian_polynomial(n, StructureKind::Cyclic);
    const auto lower = eulerian_polynomial(n - 1, StructureKind::TypeA);
    for (std::size_t i = 0; i < cyclic.counts.size() && report.pass; ++i) {
      report.grid.push_back({static_cast<long>(i) + 1});
      if (cyclic.counts[i] != n * lower.counts[i]) {
        Counterexample ce;
        ce.point = {static_cast<long>(i) + 1};
        ce.lhs = cyclic.counts[i].get_str();
        ce.rhs = Integer(n * lower.counts[i]).get_str();
        ce.note = "cyclic Eulerian coefficient of t^" + std::to_string(i + 1);
        fail(report, std::move(ce));
      }
    }
  }

  const auto augmented = eulerian_polynomial(n, StructureKind::Augmented);
  const auto ordinary = eulerian_polynomial(n, StructureKind::TypeA);
  Integer two_n = 1;
  two_n <<= n;
  for (std::size_t i = 0; i < augmented.counts.size() && report.pass; ++i) {
    if (augmented.counts[i] != two_n * ordinary.counts[i]) {
      Counterexample ce;
      ce.point = {static_cast<long>(i) + 1};
      ce.lhs = augmented.counts[i].get_str();
      ce.rhs = Integer(two_n * ordinary.counts[i]).get_str();
      ce.note = "augmented Eulerian coefficient of t^" + std::to_string(i + 1);
      fail(report, std::move(ce));
    }
  }

  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify_loday(int n) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "structure polynomial at integers = unsigned Loday element";
  report.n = n;
  for (int k = 1; k <= n && report.pass; ++k) {
    report.grid.push_back({k});
    const auto [ell, lambda] = loday_elements(n, k);
    (void)ell;
    const RationalElement lhs = structure_poly_eval(n, StructureKind::TypeA, Rational(k));
    const RationalElement rhs = abs_coefficients(lambda);
    if (auto ce = first_difference(lhs, rhs)) {
      ce->point = {k};
      fail(report, std::move(*ce));
    }
  }
  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify_theta(int n) {
  const auto start = Clock::now();
  if (n < 2) throw DomainError("theta map needs n >= 2");
  VerificationReport report;
  report.identity = "cyclic-class map is an isomorphism onto the cyclic Eulerian algebra";
  report.n = n;

  std::vector<RationalElement> lower_eulerian;
  for (int i = 1; i <= n - 1; ++i)
    lower_eulerian.push_back(eulerian_element(n - 1, StructureKind::TypeA, i));

  for (int i = 1; i <= n - 1 && report.pass; ++i) {
    const RationalElement mapped = theta_map(lower_eulerian[static_cast<std::size_t>(i - 1)]);
    const RationalElement expected = eulerian_element(n, StructureKind::Cyclic, i);
    if (auto ce = first_difference(mapped, expected)) {
      ce->point = {i};
      ce->note = "theta(E_i) vs cyclic E_i";
      fail(report, std::move(*ce));
    }
  }

  for (int x = 1; x <= n && report.pass; ++x) {
    report.grid.push_back({x});
    const RationalElement mapped =
        theta_map(structure_poly_eval(n - 1, StructureKind::TypeA, Rational(x)));
    const RationalElement expected =
        structure_poly_eval(n, StructureKind::Cyclic, Rational(x)).scaled(Rational(n));
    if (auto ce = first_difference(mapped, expected)) {
      ce->point = {x};
      ce->note = "theta of the structure polynomial vs n times the cyclic one";
      fail(report, std::move(*ce));
    }
  }

  // the normalized map theta/n is the algebra isomorphism, so
  // n·theta(ab) = theta(a)·theta(b) on the Eulerian span
  for (int i = 1; i <= n - 1 && report.pass; ++i)
    for (int j = 1; j <= n - 1 && report.pass; ++j) {
      const RationalElement lhs =
          theta_map(convolve(lower_eulerian[static_cast<std::size_t>(i - 1)],
                             lower_eulerian[static_cast<std::size_t>(j - 1)]))
              .scaled(Rational(n));
      const RationalElement rhs = convolve(theta_map(lower_eulerian[static_cast<std::size_t>(i - 1)]),
                                           theta_map(lower_eulerian[static_cast<std::size_t>(j - 1)]));
      if (auto ce = first_difference(lhs, rhs)) {
        ce->point = {i, j};
        ce->note = "multiplicativity of the normalized map on E_i * E_j";
        fail(report, std::move(*ce));
      }
    }

  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify_q_identity(int n, QIdentityPair pair, long k, long l) {
  const auto start = Clock::now();
  if (k < 1 || l < 1) throw DomainError("q identities need integer specializations k, l >= 1");

  StructureKind left_kind{}, right_kind{}, result_kind{};
  long power = 0;
  long composed = 0;
  const char* name = "";
  switch (pair) {
    case QIdentityPair::AA:
      left_kind = right_kind = result_kind = StructureKind::TypeA;
      power = k;
      composed = k * l;
      name = "phi(q;x) phi(q^x;y) = phi(q;xy)";
      break;
    case QIdentityPair::BB:
      left_kind = right_kind = result_kind = StructureKind::TypeB;
      power = 2 * k + 1;
      composed = 2 * k * l + k + l;
      name = "phi_B(q;x) phi_B(q^(2x+1);y) = phi_B(q;2xy+x+y)";
      break;
    case QIdentityPair::AugAug:
      left_kind = right_kind = result_kind = StructureKind::Augmented;
      power = 2 * k;
      composed = 2 * k * l;
      name = "psi(q;x) psi(q^(2x);y) = psi(q;2xy)";
      break;
    case QIdentityPair::AugB:
      left_kind = StructureKind::Augmented;
      right_kind = StructureKind::TypeB;
      result_kind = StructureKind::Augmented;
      power = 2 * k;
      composed = 2 * k * l + k;
      name = "psi(q;x) phi_B(q^(2x);y) = psi(q;2xy+x)";
      break;
  }

  VerificationReport report;
  report.identity = name;
  report.n = n;
  report.grid.push_back({k, l});

  const QElement left = q_structure_poly(n, left_kind, k);
  const QElement right = substitute_element(q_structure_poly(n, right_kind, l), power);
  const QElement product = convolve(left, right);
  const QElement expected = q_structure_poly(n, result_kind, composed);
  if (auto ce = first_difference(product, expected)) {
    ce->point = {k, l};
    fail(report, std::move(*ce));
  }

  report.millis = elapsed_ms(start);
  return report;
}

VerificationReport verify_shuffle(int n) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "digit-word shuffle oracle and repeated-shuffle closed form";
  report.n = n;

  for (long a = 1; a <= 4 && report.pass; ++a) {
    report.grid.push_back({a});
    const ShuffleDistribution closed = a_shuffle_distribution(n, a);
    const ShuffleDistribution oracle = gsr_oracle(n, a);
    if (augmentation(closed.probabilities) != 1) {
      Counterexample ce;
      ce.point = {a};
      ce.note = "distribution does not sum to 1";
      fail(report, std::move(ce));
      break;
    }
    if (auto ce = first_difference(oracle.probabilities, closed.probabilities)) {
      ce->point = {a};
      ce->note = "digit-word oracle vs normalized bar structure polynomial";
      fail(report, std::move(*ce));
    }
  }

  if (report.pass) {
    const ShuffleDistribution base = a_shuffle_distribution(n, 2);
    ShuffleDistribution fold = base;
    for (int m = 1; m <= 3 && report.pass; ++m) {
      const ShuffleDistribution closed = repeated_shuffle(n, m);
      if (auto ce = first_difference(fold.probabilities, closed.probabilities)) {
        ce->point = {m};
        ce->note = "m-fold convolution vs 2^m-shuffle";
        fail(report, std::move(*ce));
      }
      fold = convolve(fold, base);
    }
  }

  report.millis = elapsed_ms(start);
  return report;
}

} // namespace descents
