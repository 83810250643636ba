#pragma once

// Subset combinatorics over ground sets {1..u}, u <= 62, stored as one
// machine word. Element i of the ground set is bit i-1 of the mask.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace perm {

using SubsetMask = std::uint64_t;

inline constexpr unsigned kMaxGround = 62;

constexpr SubsetMask full_mask(unsigned u) { return u == 0 ? 0 : (~SubsetMask{0} >> (64 - u)); }
constexpr unsigned cardinality(SubsetMask s) { return static_cast<unsigned>(std::popcount(s)); }
constexpr SubsetMask singleton(unsigned bit) { return SubsetMask{1} << bit; }

// C(q, r), zero for r > q. Exact for q <= 62.
std::uint64_t binomial(unsigned q, unsigned r);
// C(q, 0) + ... + C(q, r); binsum(q, q) = 2^q.
std::uint64_t binsum(unsigned q, unsigned r);

// Rank of an r-subset of {1..u} among all r-subsets in colexicographic order.
std::uint64_t colex_rank(SubsetMask s, unsigned u, unsigned k);
SubsetMask colex_unrank(std::uint64_t rank, unsigned u, unsigned k);

// Layered rank within the down-closure {X : |X| <= kmax}: all smaller
// layers first, then colex order inside the layer.
std::uint64_t downset_rank(SubsetMask s, unsigned u, unsigned kmax);
SubsetMask downset_unrank(std::uint64_t rank, unsigned u, unsigned kmax);

// Colex successor with the same cardinality (Gosper). Returns a mask with a
// bit at or above u once the layer is exhausted.
constexpr SubsetMask next_same_size(SubsetMask s) {
  SubsetMask low = s & (~s + 1);
  SubsetMask ripple = s + low;
  return ripple | (((ripple ^ s) >> 2) / low);
}

// All k-subsets of {1..u} in colex (equivalently increasing numeric) order.
// Usable as a range: `for (SubsetMask s : KSubsets(u, k))`.
class KSubsets {
 public:
  KSubsets(unsigned u, unsigned k);

  class iterator {
   public:
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(SubsetMask current, SubsetMask limit_bit, bool single)
        : current_(current), limit_bit_(limit_bit), done_(false), single_(single) {}

    SubsetMask operator*() const { return current_; }
    iterator& operator++() {
      if (single_ || current_ == 0) {
        done_ = true;
      } else {
        current_ = next_same_size(current_);
        if (current_ & limit_bit_ || current_ == 0) done_ = true;
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    SubsetMask current_ = 0;
    SubsetMask limit_bit_ = 0;
    bool done_ = true;
    bool single_ = false;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

 private:
  unsigned u_;
  unsigned k_;
};

std::vector<SubsetMask> enumerate_k_subsets(unsigned u, unsigned k);

struct GrayStep {
  SubsetMask mask = 0;
  unsigned flipped = 0;  // 1-based element; 0 on the initial empty set
  bool added = false;
};

// All 2^u subsets in binary-reflected Gray order starting from the empty
// set; consecutive masks differ in exactly one element.
class GraySequence {
 public:
  explicit GraySequence(unsigned u);

  class iterator {
   public:
    using value_type = GrayStep;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint64_t count) : count_(count) {}

    GrayStep operator*() const { return step_; }
    iterator& operator++() {
      ++index_;
      if (index_ < count_) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(index_));
        step_.mask ^= singleton(bit);
        step_.flipped = bit + 1;
        step_.added = (step_.mask >> bit) & 1U;
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return index_ >= count_; }

   private:
    std::uint64_t index_ = 0;
    std::uint64_t count_ = 0;
    GrayStep step_{};
  };

  iterator begin() const { return iterator(count_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::uint64_t count_;
};

std::vector<GrayStep> gray_sequence(unsigned u);

}  // namespace perm
