#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "perm/algebra.hpp"
#include "perm/error.hpp"

namespace perm {

enum class Algorithm { kBruteForce, kDpColumns, kDpRows, kRyser, kRyserSplit, kRyserTransposed };

// kPer multiplies each term in row order; kPerTransposed in column order.
enum class Variant { kPer, kPerTransposed };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kBruteForce, Algorithm::kDpColumns,
                                               Algorithm::kDpRows,     Algorithm::kRyser,
                                               Algorithm::kRyserSplit, Algorithm::kRyserTransposed};

// The five fast algorithms, excluding the brute-force oracle.
inline constexpr Algorithm kFastAlgorithms[] = {Algorithm::kDpColumns, Algorithm::kDpRows, Algorithm::kRyser,
                                                Algorithm::kRyserSplit, Algorithm::kRyserTransposed};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// Whether `algo` can produce `variant` on an algebra with `caps`. Throws
// CapabilityError naming the missing capability when `throw_on_failure`.
bool supports(Algorithm algo, Variant variant, Capabilities caps, bool throw_on_failure = false);

template <class Element>
struct AlgoReport {
  Element value{};
  Algorithm algorithm = Algorithm::kBruteForce;
  Variant variant = Variant::kPer;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t predicted_bound = 0;
};

namespace detail {

inline void require_shape(std::size_t m, std::size_t n) {
  if (m > n)
    throw ShapeError("permanent needs m <= n, got a " + std::to_string(m) + "x" + std::to_string(n) + " matrix");
}

template <Semiring Alg>
void require_negation(std::string_view algo) {
  if constexpr (!Alg::kHasNegation) throw CapabilityError(std::string(algo) + ": algebra lacks negation");
}

}  // namespace detail

}  // namespace perm
