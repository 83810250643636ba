#include <doctest.h>

#include "perm/algebras.hpp"
#include "perm/disjoint_sum.hpp"
#include "perm/random.hpp"
#include "test_support.hpp"

using namespace perm;

namespace {

const ModRing kPrime(1000000007);

template <Semiring A>
TrimmedTable<typename A::Element> constant_top(const A& alg, unsigned u, unsigned k, const typename A::Element& v) {
  return make_trimmed_table(alg, u, k, std::vector<typename A::Element>(binomial(u, k), v));
}

template <Samplable A>
TrimmedTable<typename A::Element> random_top(const A& alg, unsigned u, unsigned k, SplitMix64& rng) {
  std::vector<typename A::Element> top;
  for (std::uint64_t i = 0; i < binomial(u, k); ++i) top.push_back(sample_element(alg, rng));
  return make_trimmed_table(alg, u, k, std::move(top));
}

// Pairs (S, T) with S, T on their top layers, by mask enumeration.
template <Semiring A>
typename A::Element disjoint_by_masks(const A& alg, const TrimmedTable<typename A::Element>& f,
                                      const TrimmedTable<typename A::Element>& g) {
  auto total = alg.zero();
  for (SubsetMask s = 0; s <= full_mask(f.ground); ++s) {
    if (cardinality(s) != f.kmax) continue;
    for (SubsetMask t = 0; t <= full_mask(g.ground); ++t)
      if (cardinality(t) == g.kmax && (s & t) == 0) total = alg.add(total, alg.mul(f.at(s), g.at(t)));
  }
  return total;
}

template <Samplable A>
void check_identity(const A& alg, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int t = 0; t < 200; ++t) {
    const auto u = static_cast<unsigned>(rng.below_or_equal(10));
    const auto kf = static_cast<unsigned>(rng.below_or_equal(u / 2));
    const auto kg = static_cast<unsigned>(rng.below_or_equal(u / 2));
    const auto f = random_top(alg, u, kf, rng);
    const auto g = random_top(alg, u, kg, rng);
    CAPTURE(u);
    CAPTURE(kf);
    CAPTURE(kg);
    const auto expected = direct_disjoint_sum(alg, f, g);
    REQUIRE(disjoint_pair_sum(alg, f, g) == expected);
    REQUIRE(disjoint_by_masks(alg, f, g) == expected);
  }
}

}  // namespace

TEST_CASE("trimmed zeta examples") {
  Int64Ring z;
  const auto one = trimmed_superset_zeta(z, constant_top(z, 1, 1, std::int64_t{1}));
  CHECK(one.at(0) == 1);
  CHECK(one.at(0b1) == 1);

  const auto zero = trimmed_superset_zeta(z, constant_top(z, 4, 2, std::int64_t{0}));
  for (const auto& v : zero.values) CHECK(v == 0);

  const auto pairs = trimmed_superset_zeta(z, constant_top(z, 3, 2, std::int64_t{1}));
  CHECK(pairs.at(0) == 3);
  for (unsigned i = 0; i < 3; ++i) CHECK(pairs.at(singleton(i)) == 2);
  for (SubsetMask s : KSubsets(3, 2)) CHECK(pairs.at(s) == 1);
}

TEST_CASE("trimmed zeta rejects tables with lower-layer support") {
  Int64Ring z;
  auto f = constant_top(z, 3, 2, std::int64_t{1});
  f.at(0b1) = 5;
  CHECK_THROWS_AS(trimmed_superset_zeta(z, f), DomainError);
  CHECK_THROWS_AS(make_trimmed_table(z, 3, 2, std::vector<std::int64_t>(2, 1)), DomainError);
  CHECK_THROWS_AS(make_trimmed_table(z, 3, 4, std::vector<std::int64_t>{}), DomainError);
}

TEST_CASE("disjoint pair sum examples") {
  Int64Ring z;
  const auto single = constant_top(z, 1, 1, std::int64_t{1});
  CHECK(disjoint_pair_sum(z, single, single) == 0);
  CHECK(direct_disjoint_sum(z, single, single) == 0);

  const auto zero = constant_top(z, 4, 2, std::int64_t{0});
  const auto ones = constant_top(z, 4, 1, std::int64_t{1});
  CHECK(disjoint_pair_sum(z, zero, ones) == 0);
  CHECK(direct_disjoint_sum(z, zero, ones) == 0);

  const auto singles = constant_top(z, 3, 1, std::int64_t{1});
  CHECK(disjoint_pair_sum(z, singles, singles) == 6);
  CHECK(direct_disjoint_sum(z, singles, singles) == 6);

  const auto two = constant_top(z, 2, 1, std::int64_t{1});
  CHECK(direct_disjoint_sum(z, two, two) == 2);
  CHECK(disjoint_pair_sum(z, two, two) == 2);

  const auto full = constant_top(z, 3, 3, std::int64_t{4});
  for (unsigned k = 1; k <= 3; ++k) {
    const auto g = constant_top(z, 3, k, std::int64_t{7});
    CHECK(direct_disjoint_sum(z, full, g) == 0);
    CHECK(disjoint_pair_sum(z, full, g) == 0);
  }
}

TEST_CASE("disjoint pair sum argument checks") {
  Int64Ring z;
  CHECK_THROWS_AS(disjoint_pair_sum(z, constant_top(z, 3, 1, std::int64_t{1}), constant_top(z, 4, 1, std::int64_t{1})),
                  ShapeError);
  CHECK_THROWS_AS(direct_disjoint_sum(z, constant_top(z, 13, 1, std::int64_t{1}), constant_top(z, 13, 1, std::int64_t{1})),
                  DomainError);
  Tropical t;
  const auto tt = constant_top(t, 2, 1, TropicalValue::finite(1));
  CHECK_THROWS_AS(disjoint_pair_sum(t, tt, tt), CapabilityError);
}

TEST_CASE("transform identity holds over a commutative and a noncommutative ring") {
  check_identity(kPrime, 1);
  check_identity(Mat2z{}, 2);
}

TEST_CASE("left factor order is preserved") {
  Mat2z alg;
  // f({1}) = E12, g({2}) = E21: the only disjoint pair gives E12*E21 = E11.
  auto f = make_trimmed_table(alg, 2, 1, {mat2_unit(1, 2), alg.zero()});
  auto g = make_trimmed_table(alg, 2, 1, {alg.zero(), mat2_unit(2, 1)});
  CHECK(disjoint_pair_sum(alg, f, g) == mat2_unit(1, 1));
  CHECK(disjoint_pair_sum(alg, g, f) == mat2_unit(2, 2));
}

TEST_CASE("trimmed zeta equals direct superset sums and stays within budget for u <= 10") {
  SplitMix64 rng(77);
  for (unsigned u = 0; u <= 10; ++u) {
    for (unsigned k = 0; k <= u; ++k) {
      const auto f = random_top(kPrime, u, k, rng);
      OpCounter counter;
      const auto zhat = trimmed_superset_zeta(make_counting(kPrime, counter), f);
      CHECK(counter.adds <= std::uint64_t{u} * binsum(u, k));
      CHECK(counter.muls == 0);
      for (SubsetMask x = 0; x <= full_mask(u); ++x) {
        if (cardinality(x) > k) continue;
        std::uint64_t direct = 0;
        for (SubsetMask s = 0; s <= full_mask(u); ++s)
          if (cardinality(s) == k && (s & x) == x) direct = kPrime.add(direct, f.at(s));
        REQUIRE(zhat.at(x) == direct);
      }
    }
  }
}
