#pragma once

#include "descents/group_algebra.hpp"

#include <utility>
#include <vector>

namespace descents {

// The four Eulerian subalgebra flavors. Each kind fixes a group, a descent
// statistic, a binomial coefficient rule and the idempotent substitution:
//   TypeA:     S_n, des,  C(x+n-1-des, n),        no substitution
//   Cyclic:    S_n, cdes, (1/n)·C(x+n-1-cdes, n-1), no substitution
//   TypeB:     B_n, des,  C(x+n-des, n),          x <- (x-1)/2
//   Augmented: B_n, ades, C(x+n-ades, n),         x <- x/2
enum class StructureKind { TypeA, Cyclic, TypeB, Augmented };

GroupKind group_of(StructureKind kind);
const char* kind_name(StructureKind kind);

struct IndexRange {
  int first;
  int last;
  bool contains(int i) const { return first <= i && i <= last; }
  int count() const { return last - first + 1; }
};

// Valid subscripts of the Eulerian elements E_i for each kind.
IndexRange eulerian_index_range(StructureKind kind, int n);
// Valid subscripts of the idempotents e_i (differs from the above for TypeB).
IndexRange idempotent_index_range(StructureKind kind, int n);

// The kind's statistic of a packed group element.
int statistic(StructureKind kind, const std::vector<int>& window);

// E_i: sum (coefficient 1) of the group elements whose statistic matches
// index i (des = i-1 for TypeA/TypeB, cdes = i for Cyclic, ades = i).
RationalElement eulerian_element(int n, StructureKind kind, int i);

// The structure polynomial evaluated at a rational point x; with bar set the
// coefficient of π is attached to π⁻¹ instead.
RationalElement structure_poly_eval(int n, StructureKind kind, const Rational& x,
                                    bool bar_variant = false);

// Coefficients of the (substituted) structure polynomial in powers of x.
// Members are verified to be orthogonal idempotents, and the family is
// checked to reconstruct the substituted polynomial, before return.
struct IdempotentFamily {
  StructureKind kind;
  int n;
  int first_index;
  std::vector<RationalElement> members;

  const RationalElement& member(int i) const { return members[static_cast<std::size_t>(i - first_index)]; }
  IndexRange indices() const {
    return {first_index, first_index + static_cast<int>(members.size()) - 1};
  }
};

IdempotentFamily structure_poly_coeffs(int n, StructureKind kind);

// Histogram of the kind's statistic, indexed by the usual exponent
// convention: t^(des+1) for TypeA, t^des for TypeB, t^cdes / t^ades else.
struct EulerianHistogram {
  int first_exponent;
  std::vector<Integer> counts;
};

EulerianHistogram eulerian_polynomial(int n, StructureKind kind);

// Signed elements: l^k = (-1)^(k-1) Σ_{des π = k-1} sgn(π)·π and
// λ^k = Σ_{i=0}^{k-1} (-1)^i C(n+i,i) l^(k-i). Their coefficientwise
// absolute value ties back to the structure polynomial at integer points.
std::pair<RationalElement, RationalElement> loday_elements(int n, int k);

// Coefficientwise absolute value.
RationalElement abs_coefficients(const RationalElement& a);

// Linear extension of π -> Σ_{σ in the cyclic class of π·(n)} σ, mapping
// Q[S_{n-1}] into Q[S_n]. The normalized map theta/n restricts to an algebra
// isomorphism between the Eulerian subalgebra and the cyclic Eulerian
// subalgebra (theta itself picks up a factor n on products).
RationalElement theta_map(const RationalElement& a);

// q-analog of the structure polynomial at integer argument k: coefficient of
// π is q^comaj(π)·[k+n-1-des(π) over n]_q (TypeA), with the TypeB/Augmented
// statistics analogous. The Cyclic kind has no q-analog here and is rejected.
QElement q_structure_poly(int n, StructureKind kind, long k, bool bar_variant = false);

} // namespace descents
