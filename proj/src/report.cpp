#include "perm/report.hpp"

namespace perm {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kBruteForce: return "brute";
    case Algorithm::kDpColumns: return "dp-col";
    case Algorithm::kDpRows: return "dp-row";
    case Algorithm::kRyser: return "ryser";
    case Algorithm::kRyserSplit: return "ryser-split";
    case Algorithm::kRyserTransposed: return "ryser-t";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

std::string_view variant_name(Variant v) { return v == Variant::kPer ? "per" : "per-t"; }

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "per") return Variant::kPer;
  if (name == "per-t") return Variant::kPerTransposed;
  return std::nullopt;
}

bool supports(Algorithm algo, Variant variant, Capabilities caps, bool throw_on_failure) {
  auto fail = [&](const char* missing) {
    if (throw_on_failure)
      throw CapabilityError(std::string(algorithm_name(algo)) + " " + std::string(variant_name(variant)) + ": " +
                            missing);
    return false;
  };
  bool needs_ring = algo == Algorithm::kRyser || algo == Algorithm::kRyserSplit || algo == Algorithm::kRyserTransposed;
  if (needs_ring && !caps.negation) return fail("algebra lacks negation");

  // Which product order the algorithm builds natively; the other variant
  // coincides with it only when multiplication commutes.
  bool native_per = algo != Algorithm::kDpRows && algo != Algorithm::kRyserTransposed;
  bool native_per_t = algo == Algorithm::kBruteForce || !native_per;
  bool native = variant == Variant::kPer ? native_per : native_per_t;
  if (!native && !caps.commutative) return fail("algebra is not commutative");
  return true;
}

}  // namespace perm
