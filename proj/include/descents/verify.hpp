#pragma once

#include "descents/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace descents {

// Composition laws of the product identities, applied as law(x, y).
enum class ProductLaw { XY, TwoXYPlusXPlusY, TwoXY, TwoXYPlusX };

Rational apply_law(ProductLaw law, const Rational& x, const Rational& y);

struct Counterexample {
  std::vector<long> point;  // grid point (or index pair) that failed
  std::vector<int> perm;    // window whose coefficient differs, if any
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct VerificationReport {
  std::string identity;
  int n = 0;
  std::vector<std::vector<long>> grid;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  long long millis = 0;
};

struct VerifyOptions {
  int threads = 1;
};

// Checks S(x)·T(y) = U(law(x,y)) on the integer grid {1..n+1}² — enough to
// pin both sides as polynomials of degree <= n per variable — plus one
// deterministic rational smoke point, the bar-variant compatibility at one
// grid point, and the kind's idempotent family (ideal relations for the
// mixed pair). Failures come back as reports, never exceptions.
VerificationReport verify_product_identity(int n, StructureKind lhs_kind, StructureKind rhs_kind,
                                           ProductLaw law, VerifyOptions options = {});

// Cyclic and augmented Eulerian polynomial relations:
// A^(c)_n(t) = n·A_(n-1)(t) (needs n >= 2) and A^(a)_n(t) = 2^n·A_n(t).
VerificationReport verify_eulerian_props(int n);

// Structure polynomial at integer points vs the unsigned Loday elements:
// the coefficientwise |λ^k| equals the polynomial at x=k, k = 1..n.
VerificationReport verify_loday(int n);

// The cyclic-class map: Θ(E_i) = E_i^(c), Θ of the rank n-1 structure
// polynomial = n times the cyclic one, and multiplicativity on span{E_i}.
VerificationReport verify_theta(int n);

enum class QIdentityPair { AA, BB, AugAug, AugB };

// q-analog product identities at one integer specialization (k, l): the
// second factor's coefficients are substituted q -> q^e with e = k, 2k+1,
// 2k, 2k respectively, and the right side takes the composed argument.
VerificationReport verify_q_identity(int n, QIdentityPair pair, long k, long l);

// Shuffle cross-checks: digit-word oracle vs the bar structure polynomial
// (a = 1..4) and m-fold self-convolution vs the 2^m closed form (m = 1..3).
VerificationReport verify_shuffle(int n);

} // namespace descents
