#pragma once

// Oracles: literal sums over all n!/(n-m)! injections.

#include <cstddef>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/matrix.hpp"
#include "perm/report.hpp"

namespace perm {

namespace detail {

// Visits every injection sigma: {0..m-1} -> {0..n-1} in lexicographic order.
template <class Visit>
void for_each_injection(std::size_t m, std::size_t n, Visit&& visit) {
  std::vector<std::size_t> sigma(m);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == m) {
      visit(static_cast<const std::vector<std::size_t>&>(sigma));
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      sigma[row] = j;
      self(self, row + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Sum over injections of a(0,s0) * a(1,s1) * ... * a(m-1,s_{m-1}), multiplied
// left to right in row order.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element per_bruteforce(const Alg& alg, const Matrix<A>& a) {
  detail::require_shape(a.rows(), a.cols());
  if (a.rows() == 0) return alg.one();
  Accumulator<Alg> sum(alg);
  detail::for_each_injection(a.rows(), a.cols(), [&](const std::vector<std::size_t>& sigma) {
    typename A::Element term = a.at(0, sigma[0]);
    for (std::size_t i = 1; i < sigma.size(); ++i) term = alg.mul(term, a.at(i, sigma[i]));
    sum.add(term);
  });
  return sum.value();
}

// Same sum with each term's factors ordered by ascending column index.
template <Semiring Alg, Semiring A>
  requires std::same_as<typename Alg::Element, typename A::Element>
typename A::Element per_transposed_bruteforce(const Alg& alg, const Matrix<A>& a) {
  detail::require_shape(a.rows(), a.cols());
  if (a.rows() == 0) return alg.one();
  Accumulator<Alg> sum(alg);
  std::vector<std::size_t> row_of(a.cols());
  detail::for_each_injection(a.rows(), a.cols(), [&](const std::vector<std::size_t>& sigma) {
    SubsetMask image = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      row_of[sigma[i]] = i;
      image |= singleton(static_cast<unsigned>(sigma[i]));
    }
    unsigned first = static_cast<unsigned>(std::countr_zero(image));
    typename A::Element term = a.at(row_of[first], first);
    for (image &= image - 1; image; image &= image - 1) {
      unsigned j = static_cast<unsigned>(std::countr_zero(image));
      term = alg.mul(term, a.at(row_of[j], j));
    }
    sum.add(term);
  });
  return sum.value();
}

template <Semiring A>
typename A::Element per_bruteforce(const Matrix<A>& a) {
  return per_bruteforce(a.algebra(), a);
}

template <Semiring A>
typename A::Element per_transposed_bruteforce(const Matrix<A>& a) {
  return per_transposed_bruteforce(a.algebra(), a);
}

}  // namespace perm
