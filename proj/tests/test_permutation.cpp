#include "descents/errors.hpp"
#include "descents/permutation.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace descents;

namespace {

std::vector<int> set_of(const std::vector<int>& v) { return v; }

} // namespace

TEST_CASE("compose follows a(b(i))") {
  CHECK(Permutation({1, 2, 3}).compose(Permutation({3, 1, 2})) == Permutation({3, 1, 2}));
  CHECK(Permutation({2, 1, 3}).compose(Permutation({1, 3, 2})) == Permutation({2, 3, 1}));
  CHECK(SignedPermutation({-1}).compose(SignedPermutation({-1})) == SignedPermutation({1}));
  CHECK_THROWS_AS(Permutation({1, 2}).compose(Permutation({1, 2, 3})), DomainError);
  CHECK_THROWS_AS(SignedPermutation({1, 2}).compose(SignedPermutation({1})), DomainError);
}

TEST_CASE("inverse") {
  CHECK(Permutation({1, 2, 3}).inverse() == Permutation({1, 2, 3}));
  CHECK(Permutation({2, 3, 1}).inverse() == Permutation({3, 1, 2}));
  CHECK(SignedPermutation({-2, 1}).inverse() == SignedPermutation({2, -1}));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> w(5);
    for (int i = 0; i < 5; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation pi(w);
    CHECK(pi.inverse().inverse() == pi);
    CHECK(pi.compose(pi.inverse()) == Permutation::identity(5));
  }
}

TEST_CASE("descent statistics") {
  const auto rec = descent_stats(Permutation({1, 4, 3, 2}));
  CHECK(rec.des_set == set_of({2, 3}));
  CHECK(rec.des == 2);
  CHECK(rec.cdes_set == set_of({2, 3, 4}));  // 2 = π(4) > π(1) = 1
  CHECK(rec.cdes == 3);
  CHECK(rec.comaj == 3);  // (4-2) + (4-3)
  CHECK(rec.maj == 5);

  const auto id = descent_stats(Permutation::identity(4));
  CHECK(id.des_set.empty());
  CHECK(id.cdes_set == set_of({4}));
  CHECK(id.cdes == 1);
  CHECK(id.comaj == 0);

  // n = 1 has no room for a cyclic descent
  CHECK(descent_stats(Permutation({1})).cdes == 0);
}

TEST_CASE("signed descent statistics") {
  const auto rec = signed_descent_stats(SignedPermutation({-2, 1}));
  CHECK(rec.des_set == set_of({0}));
  CHECK(rec.des == 1);
  CHECK(rec.ades_set == set_of({0, 2}));
  CHECK(rec.ades == 2);
  CHECK(rec.comaj == 2);
  CHECK(rec.acomaj == 2);

  const auto id = signed_descent_stats(SignedPermutation({1, 2}));
  CHECK(id.des_set.empty());
  CHECK(id.ades_set == set_of({2}));
  CHECK(id.ades == 1);
  CHECK(id.acomaj == 0);
}

TEST_CASE("signed descent invariants across B_3") {
  for (const auto& pi : enumerate_hyperoctahedral(3)) {
    const auto rec = signed_descent_stats(pi);
    CHECK(rec.ades >= 1);
    CHECK(rec.ades <= 3);
    CHECK(rec.ades == rec.des + (pi(3) > 0 ? 1 : 0));
    CHECK(std::includes(rec.ades_set.begin(), rec.ades_set.end(), rec.des_set.begin(),
                        rec.des_set.end()));
    CHECK(!rec.ades_set.empty());
    CHECK(static_cast<int>(rec.ades_set.size()) != 4);  // never all of {0..n}
  }
}

TEST_CASE("append_fixed_max") {
  CHECK(append_fixed_max(Permutation({2, 1})) == Permutation({2, 1, 3}));
  CHECK(append_fixed_max(Permutation({1, 2})) == Permutation({1, 2, 3}));
  CHECK(descent_stats(Permutation({3, 1, 2})).des == 1);
  CHECK(descent_stats(Permutation({3, 1, 2, 4})).cdes == 2);

  for (const auto& pi : enumerate_symmetric(4))
    CHECK(descent_stats(append_fixed_max(pi)).cdes == descent_stats(pi).des + 1);
}

TEST_CASE("cyclic classes") {
  const auto small = cyclic_class(Permutation({1, 2}));
  REQUIRE(small.size() == 2);
  CHECK(small[0] == Permutation({1, 2}));
  CHECK(small[1] == Permutation({2, 1}));

  const auto cls = cyclic_class(Permutation({2, 1, 3}));
  REQUIRE(cls.size() == 3);
  const std::set<Permutation> expected{Permutation({2, 1, 3}), Permutation({1, 3, 2}),
                                       Permutation({3, 2, 1})};
  CHECK(std::set<Permutation>(cls.begin(), cls.end()) == expected);
  for (const auto& sigma : cls) CHECK(descent_stats(sigma).cdes == 2);
}

TEST_CASE("cdes is invariant under rotation on either side") {
  const Permutation omega = rotation(4);
  Permutation left = Permutation::identity(4);
  Permutation right = Permutation::identity(4);
  for (const auto& pi : enumerate_symmetric(4)) {
    const int cdes = descent_stats(pi).cdes;
    Permutation power = Permutation::identity(4);
    for (int i = 0; i < 4; ++i) {
      CHECK(descent_stats(pi.compose(power)).cdes == cdes);
      CHECK(descent_stats(power.compose(pi)).cdes == cdes);
      power = power.compose(omega);
    }
  }
}

TEST_CASE("cyclic descent counts stay between 1 and n-1") {
  for (const auto& pi : enumerate_symmetric(4)) {
    const auto rec = descent_stats(pi);
    CHECK(rec.cdes >= 1);
    CHECK(rec.cdes <= 3);
    CHECK(rec.des == static_cast<int>(rec.des_set.size()));
    CHECK(std::includes(rec.cdes_set.begin(), rec.cdes_set.end(), rec.des_set.begin(),
                        rec.des_set.end()));
  }
}

TEST_CASE("cyclic classes of embedded permutations partition S_n") {
  std::set<Permutation> seen;
  for (const auto& pi : enumerate_symmetric(3)) {
    for (const auto& sigma : cyclic_class(append_fixed_max(pi))) {
      const bool fresh = seen.insert(sigma).second;
      CHECK(fresh);
    }
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_symmetric(3).size() == 6);
  const auto b1 = enumerate_hyperoctahedral(1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == SignedPermutation({-1}));
  CHECK(b1[1] == SignedPermutation({1}));
  CHECK(enumerate_hyperoctahedral(2).size() == 8);

  const auto s3 = enumerate_symmetric(3);
  CHECK(std::is_sorted(s3.begin(), s3.end()));

  CHECK_THROWS_AS(enumerate_symmetric(9), CapacityError);
  CHECK_THROWS_AS(enumerate_hyperoctahedral(7), CapacityError);
  CHECK_THROWS_AS(enumerate_symmetric(0), DomainError);
}

TEST_CASE("compose is associative (sampled)") {
  std::mt19937 rng(11);
  const auto perms = enumerate_symmetric(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = perms[rng() % perms.size()];
    const auto& b = perms[rng() % perms.size()];
    const auto& c = perms[rng() % perms.size()];
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
  }
  const auto signed_perms = enumerate_hyperoctahedral(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = signed_perms[rng() % signed_perms.size()];
    const auto& b = signed_perms[rng() % signed_perms.size()];
    const auto& c = signed_perms[rng() % signed_perms.size()];
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
  }
}

TEST_CASE("window parsing") {
  CHECK(parse_permutation("2,3,1") == Permutation({2, 3, 1}));
  CHECK(parse_signed_permutation("-2,1") == SignedPermutation({-2, 1}));
  CHECK(parse_permutation(" 1 , 2 ") == Permutation({1, 2}));
  CHECK_THROWS_AS(parse_permutation("1,1,2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1,4"), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("0,1"), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("-2,3"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1,x"), ParseError);
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK(format_window(std::vector<int>{-2, 1}) == "-2,1");
}

TEST_CASE("packed keys preserve lexicographic order") {
  const auto s4 = enumerate_symmetric(4);
  for (std::size_t i = 1; i < s4.size(); ++i)
    CHECK(pack_window(s4[i - 1].window()) < pack_window(s4[i].window()));
  const auto b2 = enumerate_hyperoctahedral(2);
  for (std::size_t i = 1; i < b2.size(); ++i)
    CHECK(pack_window(b2[i - 1].window()) < pack_window(b2[i].window()));
  for (const auto& pi : b2) CHECK(unpack_window(pack_window(pi.window()), 2) == pi.window());
}
