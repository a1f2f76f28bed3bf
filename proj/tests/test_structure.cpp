#include "descents/errors.hpp"
#include "descents/json_io.hpp"
#include "descents/structure.hpp"

#include <doctest.h>

using namespace descents;

namespace {

Rational int_power(long base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

} // namespace

TEST_CASE("eulerian elements") {
  const RationalElement e2 = eulerian_element(3, StructureKind::TypeA, 2);
  CHECK(e2.support_size() == 4);
  for (const auto& w : {std::vector<int>{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}})
    CHECK(e2.coefficient(w) == Rational(1));

  CHECK(eulerian_element(3, StructureKind::Cyclic, 1).support_size() == 3);
  CHECK(eulerian_element(3, StructureKind::Cyclic, 2).support_size() == 3);

  const RationalElement aug1 = eulerian_element(1, StructureKind::Augmented, 1);
  CHECK(aug1.coefficient({1}) == Rational(1));
  CHECK(aug1.coefficient({-1}) == Rational(1));

  CHECK_THROWS_AS(eulerian_element(3, StructureKind::TypeA, 0), DomainError);
  CHECK_THROWS_AS(eulerian_element(3, StructureKind::TypeA, 4), DomainError);
  CHECK_THROWS_AS(eulerian_element(3, StructureKind::Cyclic, 3), DomainError);
  CHECK_THROWS_AS(eulerian_element(1, StructureKind::Cyclic, 1), DomainError);
}

TEST_CASE("eulerian elements partition the group") {
  for (const auto kind : {StructureKind::TypeA, StructureKind::Cyclic}) {
    const int n = 4;
    RationalElement sum(GroupKind::A, n);
    const auto range = eulerian_index_range(kind, n);
    for (int i = range.first; i <= range.last; ++i) sum += eulerian_element(n, kind, i);
    CHECK(sum == all_ones_element(GroupKind::A, n));
  }
  for (const auto kind : {StructureKind::TypeB, StructureKind::Augmented}) {
    const int n = 2;
    RationalElement sum(GroupKind::B, n);
    const auto range = eulerian_index_range(kind, n);
    for (int i = range.first; i <= range.last; ++i) sum += eulerian_element(n, kind, i);
    CHECK(sum == all_ones_element(GroupKind::B, n));
  }
}

TEST_CASE("structure polynomial evaluation") {
  const RationalElement phi1 = structure_poly_eval(1, StructureKind::TypeB, Rational(1));
  CHECK(phi1.coefficient({1}) == Rational(2));
  CHECK(phi1.coefficient({-1}) == Rational(1));

  // augmentation images: the antichain order polynomials of each flavor
  for (long k = 1; k <= 3; ++k) {
    CHECK(augmentation(structure_poly_eval(3, StructureKind::TypeA, Rational(k))) ==
          int_power(k, 3));
    CHECK(augmentation(structure_poly_eval(3, StructureKind::Cyclic, Rational(k))) ==
          int_power(k, 2));
    CHECK(augmentation(structure_poly_eval(2, StructureKind::TypeB, Rational(k))) ==
          int_power(2 * k + 1, 2));
    CHECK(augmentation(structure_poly_eval(2, StructureKind::Augmented, Rational(k))) ==
          int_power(2 * k, 2));
  }

  // bar moves the identity's coefficient nowhere and transposes the rest
  const RationalElement phi = structure_poly_eval(3, StructureKind::TypeA, Rational(2));
  CHECK(bar(phi) == structure_poly_eval(3, StructureKind::TypeA, Rational(2), true));
  CHECK(bar(phi).coefficient({2, 3, 1}) == phi.coefficient({3, 1, 2}));
}

TEST_CASE("idempotent families at small rank, explicit coefficients") {
  const IdempotentFamily fam_a = structure_poly_coeffs(2, StructureKind::TypeA);
  CHECK(fam_a.first_index == 1);
  REQUIRE(fam_a.members.size() == 2);
  CHECK(fam_a.member(1).coefficient({1, 2}) == Rational(1, 2));
  CHECK(fam_a.member(1).coefficient({2, 1}) == Rational(-1, 2));
  CHECK(fam_a.member(2).coefficient({1, 2}) == Rational(1, 2));
  CHECK(fam_a.member(2).coefficient({2, 1}) == Rational(1, 2));

  const IdempotentFamily fam_b = structure_poly_coeffs(1, StructureKind::TypeB);
  CHECK(fam_b.first_index == 0);
  REQUIRE(fam_b.members.size() == 2);
  CHECK(fam_b.member(0).coefficient({1}) == Rational(1, 2));
  CHECK(fam_b.member(0).coefficient({-1}) == Rational(-1, 2));
  CHECK(fam_b.member(1).coefficient({1}) == Rational(1, 2));
  CHECK(fam_b.member(1).coefficient({-1}) == Rational(1, 2));

  const IdempotentFamily fam_aug = structure_poly_coeffs(1, StructureKind::Augmented);
  CHECK(fam_aug.first_index == 1);
  REQUIRE(fam_aug.members.size() == 1);
  CHECK(fam_aug.member(1).coefficient({1}) == Rational(1, 2));
  CHECK(fam_aug.member(1).coefficient({-1}) == Rational(1, 2));
}

TEST_CASE("idempotent families reconstruct the substituted polynomial") {
  for (long t = 1; t <= 4; ++t) {
    const IdempotentFamily fam = structure_poly_coeffs(3, StructureKind::TypeA);
    RationalElement sum(GroupKind::A, 3);
    Rational power = 1;
    for (int i = 0; i <= fam.indices().last; ++i) {
      if (i >= fam.first_index) sum += fam.member(i).scaled(power);
      power *= t;
    }
    CHECK(sum == structure_poly_eval(3, StructureKind::TypeA, Rational(t)));
  }
  for (long t = 1; t <= 3; ++t) {
    const IdempotentFamily fam = structure_poly_coeffs(2, StructureKind::TypeB);
    RationalElement sum(GroupKind::B, 2);
    Rational power = 1;
    for (int i = 0; i <= fam.indices().last; ++i) {
      if (i >= fam.first_index) sum += fam.member(i).scaled(power);
      power *= t;
    }
    CHECK(sum == structure_poly_eval(2, StructureKind::TypeB, Rational(t - 1) / 2));
  }
}

TEST_CASE("eulerian polynomials") {
  const auto a3 = eulerian_polynomial(3, StructureKind::TypeA);
  CHECK(a3.first_exponent == 1);
  CHECK(a3.counts == std::vector<Integer>{1, 4, 1});

  const auto c3 = eulerian_polynomial(3, StructureKind::Cyclic);
  CHECK(c3.first_exponent == 1);
  CHECK(c3.counts == std::vector<Integer>{3, 3});

  const auto aug1 = eulerian_polynomial(1, StructureKind::Augmented);
  CHECK(aug1.first_exponent == 1);
  CHECK(aug1.counts == std::vector<Integer>{2});

  const auto b1 = eulerian_polynomial(1, StructureKind::TypeB);
  CHECK(b1.first_exponent == 0);
  CHECK(b1.counts == std::vector<Integer>{1, 1});
}

TEST_CASE("loday elements at n=2") {
  const auto [l1, lambda1] = loday_elements(2, 1);
  CHECK(l1 == RationalElement::identity(GroupKind::A, 2));
  CHECK(lambda1 == RationalElement::identity(GroupKind::A, 2));
  CHECK(structure_poly_eval(2, StructureKind::TypeA, Rational(1)) == lambda1);

  const auto [l2, lambda2] = loday_elements(2, 2);
  CHECK(l2.coefficient({2, 1}) == Rational(1));  // (-1)^(2-1) * sgn((2,1)) = 1
  CHECK(l2.coefficient({1, 2}) == Rational(0));
  CHECK(lambda2.coefficient({2, 1}) == Rational(1));
  CHECK(lambda2.coefficient({1, 2}) == Rational(-3));
  CHECK(abs_coefficients(lambda2) == structure_poly_eval(2, StructureKind::TypeA, Rational(2)));

  CHECK_THROWS_AS(loday_elements(2, 0), DomainError);
  CHECK_THROWS_AS(loday_elements(2, 3), DomainError);
}

TEST_CASE("theta map") {
  const RationalElement image = theta_map(RationalElement::identity(GroupKind::A, 2));
  CHECK(image.support_size() == 3);
  for (const auto& w : {std::vector<int>{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})
    CHECK(image.coefficient(w) == Rational(1));

  CHECK(theta_map(eulerian_element(2, StructureKind::TypeA, 1)) ==
        eulerian_element(3, StructureKind::Cyclic, 1));
  CHECK(theta_map(eulerian_element(2, StructureKind::TypeA, 2)) ==
        eulerian_element(3, StructureKind::Cyclic, 2));

  CHECK_THROWS_AS(theta_map(RationalElement(GroupKind::B, 2)), DomainError);
}

TEST_CASE("q structure polynomials") {
  const QElement one = q_structure_poly(1, StructureKind::TypeA, 3);
  CHECK(one.coefficient({1}) == q_integer(3));

  // coefficient of (2,1) in rank 2: comaj = 1, so q·[k over 2]_q
  for (long k = 1; k <= 3; ++k) {
    const QElement el = q_structure_poly(2, StructureKind::TypeA, k);
    const QPolynomial qb = qbinomial(static_cast<unsigned long>(k), 2);
    QPolynomial expected;
    for (const auto& [e, c] : qb.terms()) expected.add_term(e + 1, c);
    CHECK(el.coefficient({2, 1}) == expected);
  }

  // q -> 1 recovers the rational structure polynomial
  for (const auto& [kind, n] : std::vector<std::pair<StructureKind, int>>{
           {StructureKind::TypeA, 3}, {StructureKind::TypeB, 2}, {StructureKind::Augmented, 2}}) {
    for (long k = 1; k <= 2; ++k) {
      const QElement qel = q_structure_poly(n, kind, k);
      const RationalElement plain = structure_poly_eval(n, kind, Rational(k));
      RationalElement specialized(group_of(kind), n);
      for (const auto& [key, c] : qel.terms()) specialized.add_term_key(key, c.evaluate(Rational(1)));
      CHECK(specialized == plain);
    }
  }

  CHECK_THROWS_AS(q_structure_poly(3, StructureKind::Cyclic, 2), DomainError);
  CHECK_THROWS_AS(q_structure_poly(3, StructureKind::TypeA, 0), DomainError);

  // bar variant transposes coefficients
  const QElement straight = q_structure_poly(3, StructureKind::TypeA, 2);
  const QElement barred = q_structure_poly(3, StructureKind::TypeA, 2, true);
  CHECK(barred.coefficient({2, 3, 1}) == straight.coefficient({3, 1, 2}));
}

TEST_CASE("idempotent family JSON") {
  const Json j = family_to_json(structure_poly_coeffs(2, StructureKind::TypeA));
  CHECK(j["kind"] == "a");
  CHECK(j["indices"] == Json::array({1, 2}));
  CHECK(j["members"].size() == 2);
  CHECK(j["members"][0]["terms"][0]["coeff"] == "1/2");
}
