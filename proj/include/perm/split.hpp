#pragma once

// per(A) = sum over disjoint column sets P, Q with |P| = k1, |Q| = k2 of
// per(A_{K,P}) * per(A_{L,Q}), where K holds the first k1 = ceil(m/2) rows
// and L the remaining k2. Both factor tables come from one run of the column
// DP each; the disjoint-pair sum keeps the K factor on the left, so the
// result is per(A) in any ring.

#include "perm/disjoint_sum.hpp"
#include "perm/dp.hpp"
#include "perm/matrix.hpp"
#include "perm/report.hpp"

namespace perm {

template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element ryser_split_value(const Alg& alg, const Matrix<A>& a) {
  detail::require_negation<Alg>("ryser-split");
  const auto m = static_cast<unsigned>(a.rows());
  const auto n = static_cast<unsigned>(a.cols());
  detail::require_shape(m, n);
  if (m == 0) return alg.one();

  const SplitPlan plan = make_split_plan(m);
  const SubsetMask all_cols = full_mask(n);
  auto f = make_trimmed_table(alg, n, plan.k1, dp_columns_layer(alg, submatrix(a, plan.top_rows(), all_cols)));
  auto g = make_trimmed_table(alg, n, plan.k2, dp_columns_layer(alg, submatrix(a, plan.bottom_rows(), all_cols)));
  return disjoint_pair_sum(alg, f, g);
}

}  // namespace perm
