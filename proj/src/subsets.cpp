#include "perm/subsets.hpp"

#include <array>
#include <string>

#include "perm/error.hpp"

namespace perm {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> choose{};
  std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> prefix{};

  constexpr BinomialTable() {
    for (unsigned q = 0; q <= kMaxGround; ++q) {
      choose[q][0] = 1;
      for (unsigned r = 1; r <= q; ++r) choose[q][r] = choose[q - 1][r - 1] + (r < q ? choose[q - 1][r] : 0);
      std::uint64_t run = 0;
      for (unsigned r = 0; r <= kMaxGround; ++r) {
        run += r <= q ? choose[q][r] : 0;
        prefix[q][r] = run;
      }
    }
  }
};

constexpr BinomialTable kTable{};

void check_ground(unsigned u) {
  if (u > kMaxGround) throw DomainError("ground set size " + std::to_string(u) + " exceeds 62");
}

void check_layer(unsigned u, unsigned k) {
  check_ground(u);
  if (k > u) throw DomainError("cardinality " + std::to_string(k) + " exceeds ground set size " + std::to_string(u));
}

}  // namespace

std::uint64_t binomial(unsigned q, unsigned r) {
  check_ground(q);
  return r > q ? 0 : kTable.choose[q][r];
}

std::uint64_t binsum(unsigned q, unsigned r) {
  check_ground(q);
  return kTable.prefix[q][r > q ? q : r];
}

std::uint64_t colex_rank(SubsetMask s, unsigned u, unsigned k) {
  check_layer(u, k);
  if (s & ~full_mask(u)) throw DomainError("subset has elements outside the ground set");
  if (cardinality(s) != k) throw DomainError("subset cardinality does not match k");
  std::uint64_t rank = 0;
  unsigned t = 1;
  while (s) {
    unsigned e = static_cast<unsigned>(std::countr_zero(s));
    rank += kTable.choose[e][t] * (t <= e);
    s &= s - 1;
    ++t;
  }
  return rank;
}

SubsetMask colex_unrank(std::uint64_t rank, unsigned u, unsigned k) {
  check_layer(u, k);
  if (rank >= kTable.choose[u][k]) throw DomainError("colex rank out of range");
  SubsetMask s = 0;
  unsigned e = u;
  for (unsigned t = k; t >= 1; --t) {
    // Largest e with C(e, t) <= rank.
    do {
      --e;
    } while (kTable.choose[e][t] > rank);
    rank -= kTable.choose[e][t];
    s |= singleton(e);
  }
  return s;
}

std::uint64_t downset_rank(SubsetMask s, unsigned u, unsigned kmax) {
  check_layer(u, kmax);
  unsigned k = cardinality(s);
  if (k > kmax) throw DomainError("subset larger than the down-closure bound");
  return (k == 0 ? 0 : kTable.prefix[u][k - 1]) + colex_rank(s, u, k);
}

SubsetMask downset_unrank(std::uint64_t rank, unsigned u, unsigned kmax) {
  check_layer(u, kmax);
  if (rank >= kTable.prefix[u][kmax]) throw DomainError("down-closure rank out of range");
  unsigned k = 0;
  while (rank >= kTable.prefix[u][k]) ++k;
  return colex_unrank(rank - (k == 0 ? 0 : kTable.prefix[u][k - 1]), u, k);
}

KSubsets::KSubsets(unsigned u, unsigned k) : u_(u), k_(k) { check_layer(u, k); }

KSubsets::iterator KSubsets::begin() const { return iterator(full_mask(k_), singleton(u_), k_ == 0); }

std::vector<SubsetMask> enumerate_k_subsets(unsigned u, unsigned k) {
  std::vector<SubsetMask> out;
  out.reserve(binomial(u, k));
  for (SubsetMask s : KSubsets(u, k)) out.push_back(s);
  return out;
}

GraySequence::GraySequence(unsigned u) : count_((check_ground(u), SubsetMask{1} << u)) {}

std::vector<GrayStep> gray_sequence(unsigned u) {
  std::vector<GrayStep> out;
  for (GrayStep step : GraySequence(u)) out.push_back(step);
  return out;
}

}  // namespace perm
