#include "descents/errors.hpp"
#include "descents/ppartition.hpp"

#include <doctest.h>

#include <map>

using namespace descents;

TEST_CASE("oracle on antichains") {
  // ordinary antichain: k^n
  CHECK(count_partitions(Poset::antichain(3), 4) == Integer(64));
  CHECK(count_partitions(Poset::antichain(1), 7) == Integer(7));
  // augmented antichain: (2k)^n
  CHECK(count_partitions(BPoset::antichain(2), 3, PartitionFlavor::Augmented) == Integer(36));
  CHECK(count_partitions(BPoset::antichain(1), 2, PartitionFlavor::Augmented) == Integer(4));
  // type B antichain: (2k+1)^n
  CHECK(count_partitions(BPoset::antichain(2), 2, PartitionFlavor::TypeB) == Integer(25));
}

TEST_CASE("oracle on chains") {
  // only f = (1,2,3,3) fits 1 <= f(3) < f(2) < f(1) <= f(4) <= 3
  CHECK(count_partitions(chain_poset(Permutation({3, 2, 1, 4})), 3) == Integer(1));
  CHECK(order_poly_closed(Permutation({3, 2, 1, 4}), 3) == Integer(1));

  // (-2,1): type B with k=2 counts 0 < f(-2) <= f(1) <= 2
  const SignedPermutation pi({-2, 1});
  CHECK(count_partitions(chain_bposet(pi), 2, PartitionFlavor::TypeB) == Integer(3));
  CHECK(order_poly_closed(pi, 2, PartitionFlavor::TypeB) == Integer(3));
  // augmented adds f(1) < 2
  CHECK(count_partitions(chain_bposet(pi), 2, PartitionFlavor::Augmented) == Integer(1));
  CHECK(order_poly_closed(pi, 2, PartitionFlavor::Augmented) == Integer(1));
}

TEST_CASE("closed forms match the oracle across S_4 and B_2") {
  for (const auto& pi : enumerate_symmetric(4)) {
    const Poset chain = chain_poset(pi);
    for (long k = 1; k <= 4; ++k) CHECK(order_poly_closed(pi, k) == count_partitions(chain, k));
  }
  for (const auto& pi : enumerate_hyperoctahedral(2)) {
    const BPoset chain = chain_bposet(pi);
    for (long k = 1; k <= 4; ++k) {
      CHECK(order_poly_closed(pi, k, PartitionFlavor::TypeB) ==
            count_partitions(chain, k, PartitionFlavor::TypeB));
      CHECK(order_poly_closed(pi, k, PartitionFlavor::Augmented) ==
            count_partitions(chain, k, PartitionFlavor::Augmented));
    }
  }
}

TEST_CASE("q oracle examples") {
  // chain of (2,1), k=2, scale {0,1}: only (i1,i2) = (0,1)
  CHECK(q_count_partitions(chain_poset(Permutation({2, 1})), 2) == QPolynomial::monomial(1, Rational(1)));
  // free single label: 1 + q + ... + q^(k-1)
  CHECK(q_count_partitions(Poset::antichain(1), 5) == q_integer(5));
  // augmented chain of (-2,1): q^2 · [k over 2]_q
  for (long k = 2; k <= 4; ++k) {
    const QPolynomial qb = qbinomial(static_cast<unsigned long>(k), 2);
    QPolynomial expected;
    for (const auto& [e, c] : qb.terms()) expected.add_term(e + 2, c);
    CHECK(q_count_partitions(chain_bposet(SignedPermutation({-2, 1})), k,
                             PartitionFlavor::Augmented) == expected);
  }
}

TEST_CASE("q closed forms match the q oracle") {
  for (const auto& pi : enumerate_symmetric(3)) {
    const Poset chain = chain_poset(pi);
    for (long k = 1; k <= 4; ++k)
      CHECK(q_order_poly_closed(pi, k) == q_count_partitions(chain, k));
  }
  for (const auto& pi : enumerate_hyperoctahedral(2)) {
    const BPoset chain = chain_bposet(pi);
    for (long k = 1; k <= 3; ++k) {
      CHECK(q_order_poly_closed(pi, k, PartitionFlavor::TypeB) ==
            q_count_partitions(chain, k, PartitionFlavor::TypeB));
      CHECK(q_order_poly_closed(pi, k, PartitionFlavor::Augmented) ==
            q_count_partitions(chain, k, PartitionFlavor::Augmented));
    }
  }
}

TEST_CASE("q oracle at q=1 recovers the plain count") {
  const Poset p = Poset::from_covers(3, {{3, 1}, {3, 2}});
  for (long k = 1; k <= 4; ++k)
    CHECK(q_count_partitions(p, k).evaluate(Rational(1)) == Rational(count_partitions(p, k)));
  const BPoset b = zigzag_b(SignedPermutation({-2, 1}), {0}, BZigzagFlavor::TypeB);
  for (long k = 1; k <= 3; ++k) {
    CHECK(q_count_partitions(b, k, PartitionFlavor::TypeB).evaluate(Rational(1)) ==
          Rational(count_partitions(b, k, PartitionFlavor::TypeB)));
    CHECK(q_count_partitions(b, k, PartitionFlavor::Augmented).evaluate(Rational(1)) ==
          Rational(count_partitions(b, k, PartitionFlavor::Augmented)));
  }
}

TEST_CASE("fundamental theorem with disjointness tags, small posets") {
  const Poset p = Poset::from_covers(3, {{3, 1}, {3, 2}});
  const auto exts = linear_extensions(p);
  const long k = 3;

  std::map<std::vector<int>, long> tally;
  long total = 0;
  for_each_ordinary_partition(p, 1, k, [&](const std::vector<long>& f) {
    ++total;
    int hits = 0;
    std::vector<int> owner;
    for (const auto& sigma : exts)
      if (is_ordinary_partition(chain_poset(sigma), f)) {
        ++hits;
        owner = sigma.window();
      }
    CHECK(hits == 1);  // disjoint union
    ++tally[owner];
  });
  Integer sum = 0;
  for (const auto& sigma : exts) {
    const Integer part = count_partitions(chain_poset(sigma), k);
    CHECK(part == Integer(tally[sigma.window()]));
    sum += part;
  }
  CHECK(sum == Integer(total));
  CHECK(sum == count_partitions(p, k));
}

TEST_CASE("fundamental theorem for a type B poset, both flavors") {
  const BPoset p = BPoset::from_covers(2, {{0, -2}});
  const auto exts = linear_extensions(p);
  REQUIRE(exts.size() > 1);
  for (const auto flavor : {PartitionFlavor::TypeB, PartitionFlavor::Augmented}) {
    const long k = 2;
    long total = 0;
    Integer by_extension = 0;
    for_each_b_partition(p, k, flavor, [&](const std::vector<long>& f) {
      ++total;
      int hits = 0;
      for (const auto& sigma : exts)
        if (is_b_partition(chain_bposet(sigma), f, flavor, k)) ++hits;
      CHECK(hits == 1);
    });
    for (const auto& sigma : exts) by_extension += count_partitions(chain_bposet(sigma), k, flavor);
    CHECK(by_extension == Integer(total));
    CHECK(by_extension == count_partitions(p, k, flavor));
  }
}

TEST_CASE("oracle guardrails") {
  CHECK_THROWS_AS(count_partitions(Poset::antichain(10), 10), CapacityError);
  CHECK_THROWS_AS(count_partitions(Poset::antichain(2), 0), DomainError);
  CHECK_THROWS_AS(count_partitions(BPoset::antichain(6), 100, PartitionFlavor::TypeB),
                  CapacityError);
}
