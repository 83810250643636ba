#pragma once

// Report-producing entry points. Each runs its kernel through a Counting<>
// wrapper and returns the value with the measured and predicted op counts.

#include "perm/algebra.hpp"
#include "perm/bruteforce.hpp"
#include "perm/cost_model.hpp"
#include "perm/dp.hpp"
#include "perm/matrix.hpp"
#include "perm/report.hpp"
#include "perm/ryser.hpp"
#include "perm/split.hpp"

namespace perm {

namespace detail {

template <Semiring A, class Kernel>
AlgoReport<typename A::Element> counted(Algorithm algo, Variant variant, const Matrix<A>& a, Kernel&& kernel) {
  supports(algo, variant, capabilities_of<A>(), /*throw_on_failure=*/true);
  OpCounter counter;
  const auto alg = make_counting(a.algebra(), counter);
  AlgoReport<typename A::Element> report;
  report.value = kernel(alg);
  report.algorithm = algo;
  report.variant = variant;
  report.m = a.rows();
  report.n = a.cols();
  report.adds = counter.adds;
  report.muls = counter.muls;
  report.predicted_bound =
      a.rows() == 0 ? 0 : predict_ops(algo, static_cast<unsigned>(a.rows()), static_cast<unsigned>(a.cols()));
  return report;
}

}  // namespace detail

template <Semiring A>
AlgoReport<typename A::Element> per_brute(const Matrix<A>& a, Variant variant = Variant::kPer) {
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kBruteForce, variant, a, [&](const auto& alg) {
    return variant == Variant::kPer ? per_bruteforce(alg, a) : per_transposed_bruteforce(alg, a);
  });
}

template <Semiring A>
AlgoReport<typename A::Element> per_dp_columns(const Matrix<A>& a) {
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kDpColumns, Variant::kPer, a,
                         [&](const auto& alg) { return dp_columns_value(alg, a); });
}

template <Semiring A>
AlgoReport<typename A::Element> per_dp_rows(const Matrix<A>& a, Variant variant) {
  supports(Algorithm::kDpRows, variant, capabilities_of<A>(), true);
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kDpRows, variant, a, [&](const auto& alg) { return dp_rows_value(alg, a); });
}

template <Semiring A>
AlgoReport<typename A::Element> per_ryser(const Matrix<A>& a, const EvalOptions& options = {}) {
  supports(Algorithm::kRyser, Variant::kPer, capabilities_of<A>(), true);
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kRyser, Variant::kPer, a,
                         [&](const auto& alg) { return ryser_value(alg, a, options); });
}

template <Semiring A>
AlgoReport<typename A::Element> per_ryser_split(const Matrix<A>& a) {
  supports(Algorithm::kRyserSplit, Variant::kPer, capabilities_of<A>(), true);
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kRyserSplit, Variant::kPer, a,
                         [&](const auto& alg) { return ryser_split_value(alg, a); });
}

template <Semiring A>
AlgoReport<typename A::Element> per_ryser_transposed(const Matrix<A>& a, Variant variant,
                                                     const EvalOptions& options = {}) {
  supports(Algorithm::kRyserTransposed, variant, capabilities_of<A>(), true);
  detail::require_shape(a.rows(), a.cols());
  return detail::counted(Algorithm::kRyserTransposed, variant, a,
                         [&](const auto& alg) { return ryser_transposed_value(alg, a, options); });
}

// Runs `algo` for `variant`. Capability is checked before shape, so an
// inapplicable pairing reports CapabilityError even on a malformed shape.
template <Semiring A>
AlgoReport<typename A::Element> evaluate(Algorithm algo, Variant variant, const Matrix<A>& a,
                                         const EvalOptions& options = {}) {
  supports(algo, variant, capabilities_of<A>(), true);
  detail::require_shape(a.rows(), a.cols());
  auto run = [&](auto&& kernel) { return detail::counted(algo, variant, a, kernel); };
  switch (algo) {
    case Algorithm::kBruteForce:
      return per_brute(a, variant);
    case Algorithm::kDpColumns:
      return run([&](const auto& alg) { return dp_columns_value(alg, a); });
    case Algorithm::kDpRows:
      return run([&](const auto& alg) { return dp_rows_value(alg, a); });
    case Algorithm::kRyser:
      return run([&](const auto& alg) { return ryser_value(alg, a, options); });
    case Algorithm::kRyserSplit:
      return run([&](const auto& alg) { return ryser_split_value(alg, a); });
    case Algorithm::kRyserTransposed:
      return run([&](const auto& alg) { return ryser_transposed_value(alg, a, options); });
  }
  throw DomainError("unknown algorithm");
}

}  // namespace perm
