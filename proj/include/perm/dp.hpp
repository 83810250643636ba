#pragma once

// Dynamic programming over column subsets (any semiring) and its transpose
// over row subsets (commutative semirings, or per' in any semiring).

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/matrix.hpp"
#include "perm/report.hpp"
#include "perm/subsets.hpp"

namespace perm {

namespace detail {

// Colex ranks of J \ {e_p} for every element e_p of J, |J| = k >= 1.
// e_t keeps its C(e_t, t+1) weight before p and drops to C(e_t, t) after.
struct DeletionRanks {
  std::array<unsigned, kMaxGround> element{};
  std::array<std::uint64_t, kMaxGround> rank{};
  unsigned size = 0;

  explicit DeletionRanks(SubsetMask set) {
    for (SubsetMask s = set; s; s &= s - 1) element[size++] = static_cast<unsigned>(std::countr_zero(s));
    std::uint64_t suffix = 0;
    for (unsigned p = size; p-- > 0;) {
      rank[p] = suffix;
      suffix += binomial(element[p], p);
    }
    std::uint64_t prefix = 0;
    for (unsigned p = 0; p < size; ++p) {
      rank[p] += prefix;
      prefix += binomial(element[p], p + 1);
    }
  }
};

}  // namespace detail

// Final layer alpha(m, J) of the column recurrence
//   alpha(1, {j}) = a(0, j)
//   alpha(i, J)   = sum_{j in J} alpha(i-1, J \ {j}) * a(i-1, j)
// indexed by colex rank over the m-subsets of the columns. Each alpha(i, J)
// is the permanent of rows 0..i-1 against columns J, products in row order.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
std::vector<typename A::Element> dp_columns_layer(const Alg& alg, const Matrix<A>& a) {
  const auto m = static_cast<unsigned>(a.rows());
  const auto n = static_cast<unsigned>(a.cols());
  detail::require_shape(m, n);
  if (m == 0) return {alg.one()};

  std::vector<typename A::Element> prev(a.entries().begin(), a.entries().begin() + n);
  for (unsigned i = 1; i < m; ++i) {
    std::vector<typename A::Element> cur;
    cur.reserve(binomial(n, i + 1));
    for (SubsetMask J : KSubsets(n, i + 1)) {
      detail::DeletionRanks del(J);
      Accumulator<Alg> sum(alg);
      for (unsigned p = 0; p < del.size; ++p) sum.add(alg.mul(prev[del.rank[p]], a.at(i, del.element[p])));
      cur.push_back(sum.value());
    }
    prev = std::move(cur);
  }
  return prev;
}

template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element dp_columns_value(const Alg& alg, const Matrix<A>& a) {
  std::vector<typename A::Element> layer = dp_columns_layer(alg, a);
  Accumulator<Alg> sum(alg);
  for (const auto& v : layer) sum.add(v);
  return sum.value();
}

// Row-subset recurrence, one column at a time:
//   alpha(I, j) = alpha(I, j-1) + sum_{i in I} alpha(I \ {i}, j-1) * a(i, j)
// evaluated only inside the window j - (n - m) <= |I| <= j. The result
// alpha(M, n) multiplies every term in column order, so it is per'(A) in any
// semiring and per(A) in a commutative one.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element dp_rows_value(const Alg& alg, const Matrix<A>& a) {
  const auto m = static_cast<unsigned>(a.rows());
  const auto n = static_cast<unsigned>(a.cols());
  detail::require_shape(m, n);
  if (m == 0) return alg.one();

  const unsigned slack = n - m;
  std::vector<typename A::Element> prev(std::size_t{1} << m, alg.zero());
  std::vector<typename A::Element> cur(prev.size(), alg.zero());
  prev[0] = alg.one();
  cur[0] = alg.one();
  for (unsigned j = 1; j <= n; ++j) {
    const unsigned lo = std::max(1U, j > slack ? j - slack : 0U);
    const unsigned hi = std::min(j, m);
    for (unsigned s = lo; s <= hi; ++s) {
      for (SubsetMask I : KSubsets(m, s)) {
        Accumulator<Alg> sum(alg);
        if (s <= j - 1) sum.add(prev[I]);
        for (SubsetMask r = I; r; r &= r - 1) {
          unsigned i = static_cast<unsigned>(std::countr_zero(r));
          if (s == 1)
            sum.add(a.at(i, j - 1));
          else
            sum.add(alg.mul(prev[I ^ singleton(i)], a.at(i, j - 1)));
        }
        cur[I] = sum.value();
      }
    }
    std::swap(prev, cur);
  }
  return prev[full_mask(m)];
}

}  // namespace perm
