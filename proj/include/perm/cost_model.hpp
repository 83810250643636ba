#pragma once

// Operation counts for the permanent algorithms.
//
// predict_ops() is the published budget for each algorithm: the exact
// multiplication count for the column DP, and an upper bound on additions
// plus multiplications for the others. exact_ops() is the precise tally this
// implementation performs, which the test suite checks against measured
// counts and auto-selection minimizes.

#include <cstdint>

#include "perm/algebra.hpp"
#include "perm/report.hpp"

namespace perm {

struct OpEstimate {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const { return adds + muls; }
  friend bool operator==(const OpEstimate&, const OpEstimate&) = default;
};

// Requires 1 <= m <= n <= 62. Throws DomainError when out of range or when
// the value does not fit in 64 bits.
std::uint64_t predict_ops(Algorithm algo, unsigned m, unsigned n);

// Requires 0 <= m <= n <= 62; zero for m = 0.
OpEstimate exact_ops(Algorithm algo, unsigned m, unsigned n);

// Applicable algorithm with the smallest exact operation count; ties go to
// dp-row, then ryser-t, ryser-split, ryser, dp-col.
Algorithm algo_auto_select(Capabilities caps, unsigned m, unsigned n, Variant variant);

}  // namespace perm
