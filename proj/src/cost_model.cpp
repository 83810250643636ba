#include "perm/cost_model.hpp"

#include <limits>
#include <string>

#include "perm/error.hpp"
#include "perm/subsets.hpp"

namespace perm {

namespace {

using Wide = unsigned __int128;

std::uint64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw DomainError("operation count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

void check_range(unsigned m, unsigned n, unsigned min_m) {
  if (m < min_m || m > n || n > kMaxGround)
    throw DomainError("operation model needs " + std::to_string(min_m) + " <= m <= n <= 62, got m=" +
                      std::to_string(m) + " n=" + std::to_string(n));
}

Wide pow2(unsigned e) { return Wide{1} << e; }

// Additions used by scalar_mul(c, .).
unsigned doubling_adds(std::uint64_t c) {
  if (c <= 1) return 0;
  return static_cast<unsigned>(63 - std::countl_zero(c) + std::popcount(c) - 1);
}

Wide injections(unsigned m, unsigned n) {
  Wide p = 1;
  for (unsigned i = 0; i < m; ++i) {
    p *= n - i;
    if (p > std::numeric_limits<std::uint64_t>::max()) throw DomainError("operation count exceeds 64 bits");
  }
  return p;
}

// Multiplications of the column DP producing the size-k layer.
Wide column_layer_muls(unsigned k, unsigned n) {
  Wide s = 0;
  for (unsigned i = 2; i <= k; ++i) s += Wide{i} * binomial(n, i);
  return s;
}

Wide column_layer_adds(unsigned k, unsigned n) {
  Wide s = 0;
  for (unsigned i = 2; i <= k; ++i) s += Wide{i - 1} * binomial(n, i);
  return s;
}

Wide zeta_adds(unsigned k, unsigned n) {
  Wide s = 0;
  for (unsigned t = 1; t <= k; ++t) s += Wide{t} * binomial(n, t);
  return s;
}

struct WideEstimate {
  Wide adds = 0;
  Wide muls = 0;
  Wide total() const { return adds + muls; }
};

WideEstimate exact_wide(Algorithm algo, unsigned m, unsigned n) {
  check_range(m, n, 0);
  if (m == 0) return {};
  switch (algo) {
    case Algorithm::kBruteForce: {
      Wide p = injections(m, n);
      return {p - 1, p * (m - 1)};
    }
    case Algorithm::kDpColumns:
      return {column_layer_adds(m, n) + binomial(n, m) - 1, column_layer_muls(m, n)};
    case Algorithm::kDpRows: {
      Wide width = n - m + 1;
      WideEstimate e;
      for (unsigned s = 1; s <= m; ++s) {
        e.adds += Wide{binomial(m, s)} * (width * s - 1);
        if (s >= 2) e.muls += Wide{binomial(m, s)} * width * s;
      }
      return e;
    }
    case Algorithm::kRyser: {
      Wide visited = binsum(n, m) - 1;  // nonempty X with |X| <= m
      WideEstimate e;
      e.adds = Wide{m} * (visited - n) + (visited - m) + (m - 1);
      for (unsigned k = 1; k <= m; ++k) e.adds += doubling_adds(binomial(n - k, m - k));
      e.muls = Wide{m - 1} * visited;
      return e;
    }
    case Algorithm::kRyserSplit: {
      unsigned k1 = (m + 1) / 2;
      unsigned k2 = m / 2;
      Wide pairs = binsum(n, k2);
      return {column_layer_adds(k1, n) + column_layer_adds(k2, n) + zeta_adds(k1, n) + zeta_adds(k2, n) + pairs - 1,
              column_layer_muls(k1, n) + column_layer_muls(k2, n) + pairs};
    }
    case Algorithm::kRyserTransposed: {
      Wide subsets = pow2(m) - 1;  // nonempty X
      WideEstimate e;
      e.adds = (subsets - 1) * n + subsets * (Wide{m} * (n - m)) + (subsets - 1);
      e.muls = subsets * (Wide{m - 1} * (n - m + 1));
      return e;
    }
  }
  throw DomainError("unknown algorithm");
}

}  // namespace

std::uint64_t predict_ops(Algorithm algo, unsigned m, unsigned n) {
  check_range(m, n, 1);
  switch (algo) {
    case Algorithm::kBruteForce:
      return narrow(Wide{m} * injections(m, n));
    case Algorithm::kDpColumns:
      return narrow(column_layer_muls(m, n));
    case Algorithm::kDpRows:
      return narrow(Wide{m} * (n - m + 1) * pow2(m));
    case Algorithm::kRyser:
      return narrow(Wide{2} * m * binsum(n, m));
    case Algorithm::kRyserSplit:
      return narrow(Wide{2} * m * binsum(n, (m + 1) / 2));
    case Algorithm::kRyserTransposed:
      return narrow((Wide{m} * n - Wide{m} * m + n + m) * pow2(m));
  }
  throw DomainError("unknown algorithm");
}

OpEstimate exact_ops(Algorithm algo, unsigned m, unsigned n) {
  WideEstimate e = exact_wide(algo, m, n);
  return {narrow(e.adds), narrow(e.muls)};
}

Algorithm algo_auto_select(Capabilities caps, unsigned m, unsigned n, Variant variant) {
  check_range(m, n, 0);
  constexpr Algorithm kPrecedence[] = {Algorithm::kDpRows, Algorithm::kRyserTransposed, Algorithm::kRyserSplit,
                                       Algorithm::kRyser, Algorithm::kDpColumns};
  bool found = false;
  Algorithm best = Algorithm::kDpRows;
  Wide best_cost = 0;
  for (Algorithm algo : kPrecedence) {
    if (!supports(algo, variant, caps)) continue;
    Wide cost = exact_wide(algo, m, n).total();
    if (!found || cost < best_cost) {
      found = true;
      best = algo;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace perm
