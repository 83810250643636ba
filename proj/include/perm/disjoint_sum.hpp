#pragma once

// Sums over disjoint pairs of subsets via trimmed superset transforms:
//
//   sum_{S, T disjoint} f(S) g(T) = sum_X (-1)^|X| fhat(X) ghat(X)
//   where fhat(X) = sum_{S >= X} f(S), ghat(X) = sum_{T >= X} g(T).
//
// f and g are supported on a single cardinality layer, so the transforms only
// need the down-closure of that layer.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/error.hpp"
#include "perm/report.hpp"
#include "perm/subsets.hpp"

namespace perm {

// Values for every X in {1..ground} with |X| <= kmax, indexed by
// downset_rank(X, ground, kmax).
template <class Element>
struct TrimmedTable {
  unsigned ground = 0;
  unsigned kmax = 0;
  std::vector<Element> values;

  const Element& at(SubsetMask x) const { return values[downset_rank(x, ground, kmax)]; }
  Element& at(SubsetMask x) { return values[downset_rank(x, ground, kmax)]; }
};

// Table supported on the top layer: `top` holds the kmax-subsets in colex
// order, every smaller subset maps to zero.
template <Semiring Alg>
TrimmedTable<typename Alg::Element> make_trimmed_table(const Alg& alg, unsigned ground, unsigned kmax,
                                                       std::vector<typename Alg::Element> top) {
  if (kmax > ground) throw DomainError("kmax exceeds the ground set");
  if (top.size() != binomial(ground, kmax)) throw DomainError("top layer has the wrong number of entries");
  std::vector<typename Alg::Element> values(binsum(ground, kmax) - top.size(), alg.zero());
  values.insert(values.end(), std::make_move_iterator(top.begin()), std::make_move_iterator(top.end()));
  return {ground, kmax, std::move(values)};
}

// zhat(X) = sum_{S >= X, |S| = kmax} f(S) for all |X| <= kmax. One pass per
// ground element j folds zhat(X + j) into zhat(X) for every X lacking j below
// the top layer; top-layer entries are never touched.
template <Semiring Alg>
TrimmedTable<typename Alg::Element> trimmed_superset_zeta(const Alg& alg, const TrimmedTable<typename Alg::Element>& f) {
  const unsigned u = f.ground;
  const unsigned k = f.kmax;
  if (f.values.size() != binsum(u, k)) throw DomainError("table size does not match its down-closure");
  const std::uint64_t top_offset = k == 0 ? 0 : binsum(u, k - 1);
  for (std::uint64_t r = 0; r < top_offset; ++r)
    if (!(f.values[r] == alg.zero())) throw DomainError("table is not supported on its top layer");

  TrimmedTable<typename Alg::Element> z = f;
  for (unsigned j = 0; j < u; ++j) {
    const SubsetMask bit = singleton(j);
    for (unsigned s = 0; s < k; ++s) {
      std::uint64_t r = s == 0 ? 0 : binsum(u, s - 1);
      for (SubsetMask x : KSubsets(u, s)) {
        if (!(x & bit)) z.values[r] = alg.add(z.values[r], z.at(x | bit));
        ++r;
      }
    }
  }
  return z;
}

template <Semiring Alg>
typename Alg::Element disjoint_pair_sum(const Alg& alg, const TrimmedTable<typename Alg::Element>& f,
                                        const TrimmedTable<typename Alg::Element>& g) {
  detail::require_negation<Alg>("disjoint_pair_sum");
  if (f.ground != g.ground) throw ShapeError("disjoint_pair_sum: tables over different ground sets");
  if constexpr (Alg::kHasNegation) {
    const auto fz = trimmed_superset_zeta(alg, f);
    const auto gz = trimmed_superset_zeta(alg, g);
    const unsigned u = f.ground;
    Accumulator<Alg> total(alg);
    std::uint64_t r = 0;
    // Downset ranks do not depend on kmax, so X has rank r in both tables.
    for (unsigned s = 0; s <= std::min(f.kmax, g.kmax); ++s) {
      for (std::uint64_t count = binomial(u, s); count > 0; --count, ++r)
        total.add_signed(alg.mul(fz.values[r], gz.values[r]), s % 2 == 1);
    }
    return total.value();
  } else {
    return alg.zero();
  }
}

// Literal double loop over every stored pair, skipping intersecting ones.
template <Semiring Alg>
typename Alg::Element direct_disjoint_sum(const Alg& alg, const TrimmedTable<typename Alg::Element>& f,
                                          const TrimmedTable<typename Alg::Element>& g) {
  constexpr unsigned kMaxDirectGround = 12;
  if (f.ground != g.ground) throw ShapeError("direct_disjoint_sum: tables over different ground sets");
  if (f.ground > kMaxDirectGround) throw DomainError("direct_disjoint_sum supports ground sets up to 12");
  auto masks = [](const TrimmedTable<typename Alg::Element>& t) {
    std::vector<SubsetMask> out;
    for (unsigned s = 0; s <= t.kmax; ++s)
      for (SubsetMask x : KSubsets(t.ground, s)) out.push_back(x);
    return out;
  };
  const auto fs = masks(f);
  const auto gs = masks(g);
  Accumulator<Alg> total(alg);
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < gs.size(); ++b)
      if ((fs[a] & gs[b]) == 0) total.add(alg.mul(f.values[a], g.values[b]));
  return total.value();
}

}  // namespace perm
