#include "descents/group_algebra.hpp"

namespace descents {

RationalElement all_ones_element(GroupKind kind, int n) {
  RationalElement out(kind, n);
  if (kind == GroupKind::A) {
    for (const auto& pi : enumerate_symmetric(n)) out.add_term(pi.window(), Rational(1));
  } else {
    for (const auto& pi : enumerate_hyperoctahedral(n)) out.add_term(pi.window(), Rational(1));
  }
  return out;
}

} // namespace descents
