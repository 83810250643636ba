#pragma once

// Inclusion-exclusion evaluation: Ryser's formula over column subsets and
// its transpose over row subsets.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/matrix.hpp"
#include "perm/report.hpp"
#include "perm/subsets.hpp"

namespace perm {

struct EvalOptions {
  // Re-derive every incrementally maintained partial sum from scratch after
  // each update and throw std::logic_error on a mismatch. The check uses the
  // matrix's own algebra, so it does not disturb operation counts.
  bool verify_incremental_state = false;
};

// per(A) = sum_{X, |X| <= m} (-1)^(m-|X|) C(n-|X|, m-|X|) a_{0X} a_{1X} ... a_{m-1,X}
// where a_{iX} is the row-i sum over columns X. Valid in any ring; products
// run in row order.
//
// Subsets are visited depth first by increasing column. Each depth keeps its
// own copy of the m row sums, derived from the parent's with m additions
// (singletons are copied outright). Products are summed per cardinality and
// the binomial weights applied once per cardinality at the end.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element ryser_value(const Alg& alg, const Matrix<A>& a, const EvalOptions& options = {}) {
  detail::require_negation<Alg>("ryser");
  const auto m = static_cast<unsigned>(a.rows());
  const auto n = static_cast<unsigned>(a.cols());
  detail::require_shape(m, n);
  if constexpr (Alg::kHasNegation) {
    using E = typename A::Element;
    if (m == 0) return alg.one();

    // sums[d * m + i] = a_{iX} for the subset X on the stack at depth d.
    std::vector<E> sums(std::size_t{m + 1} * m, alg.zero());
    std::vector<Accumulator<Alg>> by_size(m + 1, Accumulator<Alg>(alg));

    auto check = [&](SubsetMask x, unsigned depth) {
      for (unsigned i = 0; i < m; ++i) {
        E direct = a.algebra().zero();
        for (SubsetMask r = x; r; r &= r - 1) direct = a.algebra().add(direct, a.at(i, static_cast<unsigned>(std::countr_zero(r))));
        if (!(direct == sums[depth * m + i])) throw std::logic_error("ryser: row sum diverged from direct summation");
      }
    };

    auto visit = [&](auto&& self, SubsetMask x, unsigned depth, unsigned first) -> void {
      for (unsigned j = first; j < n; ++j) {
        const unsigned d = depth + 1;
        const SubsetMask y = x | singleton(j);
        for (unsigned i = 0; i < m; ++i)
          sums[d * m + i] = depth == 0 ? a.at(i, j) : alg.add(sums[depth * m + i], a.at(i, j));
        if (options.verify_incremental_state) check(y, d);
        E product = sums[d * m];
        for (unsigned i = 1; i < m; ++i) product = alg.mul(product, sums[d * m + i]);
        by_size[d].add(product);
        if (d < m) self(self, y, d, j + 1);
      }
    };
    visit(visit, 0, 0, 0);

    Accumulator<Alg> total(alg);
    for (unsigned k = 1; k <= m; ++k)
      total.add_signed(scalar_mul(binomial(n - k, m - k), by_size[k].value(), alg), (m - k) % 2 == 1);
    return total.value();
  } else {
    return alg.zero();
  }
}

// Sum over all m-subsets j_1 < ... < j_m of values[j_1] * ... * values[j_m],
// products in ascending index order; one for m = 0.
//
// e(k) after j values is the degree-k accumulation over the first j; only
// m - (n - j) <= k <= min(j, m) can still reach degree m and is kept.
template <Semiring Alg>
typename Alg::Element esym_accumulate(const Alg& alg, std::span<const typename Alg::Element> values, std::size_t m) {
  const std::size_t n = values.size();
  if (m > n) throw ShapeError("esym_accumulate: degree exceeds the number of values");
  if (m == 0) return alg.one();
  std::vector<typename Alg::Element> e(m + 1, alg.zero());
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& c = values[j - 1];
    const std::size_t lo = std::max<std::size_t>(1, m + j > n ? m + j - n : 1);
    const std::size_t hi = std::min(j, m);
    for (std::size_t k = hi; k >= lo; --k) {
      typename Alg::Element term = k == 1 ? c : alg.mul(e[k - 1], c);
      e[k] = k == j ? std::move(term) : alg.add(e[k], term);
    }
  }
  return e[m];
}

// per(A) = sum_{X subset of rows} (-1)^(m-|X|) e_m(a_{X0}, ..., a_{X,n-1})
// with a_{Xj} the column-j sum over rows X and e_m the esym_accumulate()
// inner sum. Column-ordered products make this per'(A) in any ring, equal to
// per(A) when multiplication commutes. Rows are visited in Gray order; each
// flip updates the n column sums with n additions or subtractions.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element ryser_transposed_value(const Alg& alg, const Matrix<A>& a, const EvalOptions& options = {}) {
  detail::require_negation<Alg>("ryser-t");
  const auto m = static_cast<unsigned>(a.rows());
  const auto n = static_cast<unsigned>(a.cols());
  detail::require_shape(m, n);
  if constexpr (Alg::kHasNegation) {
    using E = typename A::Element;
    if (m == 0) return alg.one();

    std::vector<E> cols(n, alg.zero());
    bool first_flip = true;
    Accumulator<Alg> total(alg);
    for (GrayStep step : GraySequence(m)) {
      if (step.flipped == 0) continue;  // the empty row set contributes zero
      const unsigned row = step.flipped - 1;
      for (unsigned j = 0; j < n; ++j) {
        if (first_flip)
          cols[j] = a.at(row, j);
        else
          cols[j] = alg.add(cols[j], step.added ? a.at(row, j) : alg.neg(a.at(row, j)));
      }
      first_flip = false;
      if (options.verify_incremental_state) {
        for (unsigned j = 0; j < n; ++j) {
          E direct = a.algebra().zero();
          for (SubsetMask r = step.mask; r; r &= r - 1) direct = a.algebra().add(direct, a.at(static_cast<unsigned>(std::countr_zero(r)), j));
          if (!(direct == cols[j])) throw std::logic_error("ryser-t: column sum diverged from direct summation");
        }
      }
      total.add_signed(esym_accumulate<Alg>(alg, cols, m), (m - cardinality(step.mask)) % 2 == 1);
    }
    return total.value();
  } else {
    return alg.zero();
  }
}

}  // namespace perm
