#include <doctest.h>

#include "perm/algebras.hpp"
#include "perm/matrix.hpp"
#include "perm/random.hpp"
#include "test_support.hpp"

using namespace perm;

namespace {

template <Samplable A>
void check_round_trip(const A& alg) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto m = static_cast<std::size_t>(rng.below_or_equal(8));
    auto n = static_cast<std::size_t>(rng.below_or_equal(8));
    if (n == 0) m = 0;
    const auto a = random_matrix(alg, m, n, rng);
    CAPTURE(alg.name());
    REQUIRE(parse_matrix(render_matrix(a), alg) == a);
  }
}

}  // namespace

TEST_CASE("parse_matrix examples") {
  Int64Ring z;
  const auto a = parse_matrix("2 2\n1 2\n3 4", z);
  CHECK(a == make_matrix(z, {{1, 2}, {3, 4}}));

  Mat2 alg;
  const auto b = parse_matrix("1 2\n0,1,0,0 0,0,1,0", alg);
  CHECK(b == make_matrix(alg, {{mat2_unit(1, 2), mat2_unit(2, 1)}}));

  const auto c = parse_matrix("2 1\n1\n2", z);
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 1);
}

TEST_CASE("parse_matrix tolerates comments, blank lines and trailing space") {
  Int64Ring z;
  const auto a = parse_matrix("# header\n\n2 3\n# row one\n1 2 3\n  4\t5 6  \n", z);
  CHECK(a == make_matrix(z, {{1, 2, 3}, {4, 5, 6}}));
  const auto empty = parse_matrix("0 3\n", z);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 3);
}

TEST_CASE("parse_matrix rejections") {
  Int64Ring z;
  CHECK_THROWS_AS(parse_matrix("", z), ParseError);
  CHECK_THROWS_AS(parse_matrix("# only comments\n", z), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 2\n", z), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 x\n1 2\n", z), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2 2\n1 2\n3 4\n", z), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n", z), ParseError);          // ragged
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3 4 5\n", z), ParseError);      // too many entries
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n", z), ParseError);             // missing row
  CHECK_THROWS_AS(parse_matrix("1 2\n1 2\n3 4\n", z), ParseError);        // extra row
  CHECK_THROWS_AS(parse_matrix("1 2\n1 two\n", z), ParseError);           // bad entry
  CHECK_THROWS_AS(parse_matrix("1 63\n" + std::string(63 * 2, ' '), z), ParseError);  // n > 62
  CHECK_THROWS_AS(parse_matrix("1 2\n0,1,0,0 0,0,-1,0\n", Mat2{}), ParseError);
}

TEST_CASE("render then parse is the identity for every algebra") {
  check_round_trip(Int64Ring{});
  check_round_trip(BigIntRing{});
  check_round_trip(ModRing(97));
  check_round_trip(Tropical{});
  check_round_trip(Mat2{});
  check_round_trip(Mat2z{});

  Tropical t;
  const auto inf = make_matrix(t, {{t.zero(), TropicalValue::finite(-2)}});
  CHECK(render_matrix(inf) == "1 2\ninf -2\n");
  CHECK(parse_matrix(render_matrix(inf), t) == inf);
}

TEST_CASE("submatrix examples") {
  Int64Ring z;
  const auto a = make_matrix(z, {{1, 2}, {3, 4}});
  CHECK(submatrix(a, full_mask(2), full_mask(2)) == a);
  CHECK(submatrix(a, 0b01, 0b10) == make_matrix(z, {{2}}));
  const auto b = make_matrix(z, {{1, 2, 3}, {4, 5, 6}});
  CHECK(submatrix(b, 0b10, 0b101) == make_matrix(z, {{4, 6}}));
  CHECK_THROWS_AS(submatrix(b, 0b100, 0b1), DomainError);
}

TEST_CASE("submatrix picks the i-th smallest row and j-th smallest column") {
  SplitMix64 rng(5);
  Int64Ring z;
  for (int t = 0; t < 200; ++t) {
    const auto m = static_cast<unsigned>(1 + rng.below_or_equal(7));
    const auto n = static_cast<unsigned>(1 + rng.below_or_equal(7));
    const auto a = random_matrix(z, m, n, rng);
    const SubsetMask rows = rng.next() & full_mask(m);
    const SubsetMask cols = rng.next() & full_mask(n);
    const auto s = submatrix(a, rows, cols);
    std::vector<unsigned> row_index, col_index;
    for (unsigned i = 0; i < m; ++i)
      if (rows >> i & 1) row_index.push_back(i);
    for (unsigned j = 0; j < n; ++j)
      if (cols >> j & 1) col_index.push_back(j);
    REQUIRE(s.rows() == row_index.size());
    REQUIRE(s.cols() == col_index.size());
    for (std::size_t i = 0; i < row_index.size(); ++i)
      for (std::size_t j = 0; j < col_index.size(); ++j) REQUIRE(s.at(i, j) == a.at(row_index[i], col_index[j]));
  }
}

TEST_CASE("split plan halves the rows") {
  for (unsigned m = 0; m <= 62; ++m) {
    const SplitPlan plan = make_split_plan(m);
    CHECK(plan.k1 + plan.k2 == m);
    CHECK(plan.k1 - plan.k2 <= 1);
    CHECK((plan.top_rows() | plan.bottom_rows()) == full_mask(m));
    CHECK((plan.top_rows() & plan.bottom_rows()) == 0);
    CHECK(cardinality(plan.top_rows()) == plan.k1);
  }
  CHECK(make_split_plan(5).k1 == 3);
  CHECK(make_split_plan(5).bottom_rows() == 0b11000);
}
