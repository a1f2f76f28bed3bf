#pragma once

#include "descents/shuffle.hpp"
#include "descents/structure.hpp"
#include "descents/verify.hpp"

#include <json.hpp>

namespace descents {

// ordered_json keeps insertion order, so identical inputs give
// byte-identical output
using Json = nlohmann::ordered_json;

// {"group":"A","n":3,"coeff_ring":"rational","terms":[{"perm":[...],"coeff":"p/q"},...]}
Json element_to_json(const RationalElement& a);
// qpoly terms carry {"perm":[...],"coeff_q":{"<exp>":"p/q",...}}
Json element_to_json(const QElement& a);

RationalElement rational_element_from_json(const Json& j);
QElement q_element_from_json(const Json& j);

Json record_to_json(const DescentRecord& rec, int n);
Json record_to_json(const SignedDescentRecord& rec, int n);

Json family_to_json(const IdempotentFamily& family);

Json report_to_json(const VerificationReport& report);

// decimal_digits < 0 leaves the decimal rendering out
Json distribution_to_json(const ShuffleDistribution& d, int decimal_digits = -1);
std::string distribution_to_csv(const ShuffleDistribution& d, int decimal_digits = -1);

Json histogram_to_json(const EulerianHistogram& hist, StructureKind kind, int n);

Json qpolynomial_to_json(const QPolynomial& p);

} // namespace descents
