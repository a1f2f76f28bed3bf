#include "descents/json_io.hpp"
#include "descents/shuffle.hpp"

#include <doctest.h>

using namespace descents;

TEST_CASE("one packet is a point mass at the identity") {
  for (int n = 1; n <= 4; ++n) {
    const auto d = a_shuffle_distribution(n, 1);
    CHECK(d.probabilities.support_size() == 1);
    CHECK(d.probabilities.coefficient(Permutation::identity(n).window()) == Rational(1));
    const auto o = gsr_oracle(n, 1);
    CHECK(o.probabilities == d.probabilities);
  }
}

TEST_CASE("the classical n=3, a=2 distribution") {
  const auto d = a_shuffle_distribution(3, 2);
  CHECK(d.probabilities.coefficient({1, 2, 3}) == Rational(1, 2));
  for (const auto& w : {std::vector<int>{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}})
    CHECK(d.probabilities.coefficient(w) == Rational(1, 8));
  CHECK(d.probabilities.coefficient({3, 2, 1}) == Rational(0));
  CHECK(augmentation(d.probabilities) == Rational(1));
}

TEST_CASE("digit-word oracle agrees with the closed form") {
  for (int n = 1; n <= 4; ++n)
    for (long a = 1; a <= 4; ++a) {
      const auto closed = a_shuffle_distribution(n, a);
      CHECK(augmentation(closed.probabilities) == Rational(1));
      CHECK(gsr_oracle(n, a).probabilities == closed.probabilities);
    }
}

TEST_CASE("repeated shuffles match m-fold convolution") {
  for (int n = 1; n <= 5; ++n) {
    const auto base = a_shuffle_distribution(n, 2);
    ShuffleDistribution fold = base;
    for (int m = 1; m <= 3; ++m) {
      CHECK(repeated_shuffle(n, m).probabilities == fold.probabilities);
      fold = convolve(fold, base);
    }
  }
}

TEST_CASE("total variation distance") {
  const auto u = uniform_distribution(2);
  const auto point = a_shuffle_distribution(2, 1);
  CHECK(total_variation(point, point) == Rational(0));
  CHECK(total_variation(point, u) == Rational(1, 2));
  CHECK(total_variation(u, point) == Rational(1, 2));
}

TEST_CASE("distance to uniform is nonincreasing over m = 1..6 (n = 4)") {
  const auto u = uniform_distribution(4);
  Rational last(2);
  for (int m = 1; m <= 6; ++m) {
    const Rational t = total_variation(repeated_shuffle(4, m), u);
    CHECK(t <= last);
    CHECK(t >= 0);
    last = t;
  }
}

TEST_CASE("distribution output formats") {
  const auto d = a_shuffle_distribution(2, 2);
  const Json j = distribution_to_json(d, 3);
  CHECK(j["n"] == 2);
  CHECK(j["a"] == 2);
  CHECK(j["terms"][0]["prob"] == "3/4");
  CHECK(j["terms"][0]["prob_decimal"] == "0.750");

  const std::string csv = distribution_to_csv(d);
  CHECK(csv == "window,probability\n\"1,2\",3/4\n\"2,1\",1/4\n");
}
