#pragma once

// The algebraic-structure contract every permanent algorithm is generic over.
//
// An algebra is a small copyable value that owns no elements. It supplies the
// carrier type `Element`, the constants zero()/one(), the binary operations
// add()/mul(), text conversion, and two compile-time capability flags:
//
//   kCommutative  mul(x, y) == mul(y, x) for all x, y
//   kHasNegation  neg() exists and add(x, neg(x)) == zero()
//
// Addition is always associative and commutative; multiplication is always
// associative and distributes over addition on both sides. Algorithms never
// reorder multiplicands, so noncommutative carriers see products in exactly
// the order each algorithm documents.

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace perm {

template <class A>
concept Semiring =
    std::copy_constructible<A> && std::regular<typename A::Element> &&
    requires(const A& a, const typename A::Element& x, std::string_view text) {
      { a.zero() } -> std::same_as<typename A::Element>;
      { a.one() } -> std::same_as<typename A::Element>;
      { a.add(x, x) } -> std::same_as<typename A::Element>;
      { a.mul(x, x) } -> std::same_as<typename A::Element>;
      { a.parse(text) } -> std::same_as<typename A::Element>;
      { a.render(x) } -> std::same_as<std::string>;
      { a.name() } -> std::convertible_to<std::string>;
      std::bool_constant<A::kCommutative>{};
      std::bool_constant<A::kHasNegation>{};
    };

template <class A>
concept Ring = Semiring<A> && A::kHasNegation &&
               requires(const A& a, const typename A::Element& x) {
                 { a.neg(x) } -> std::same_as<typename A::Element>;
               };

template <class A>
concept CommutativeSemiring = Semiring<A> && A::kCommutative;

struct Capabilities {
  bool commutative = false;
  bool negation = false;

  friend bool operator==(const Capabilities&, const Capabilities&) = default;
};

template <Semiring A>
constexpr Capabilities capabilities_of() {
  return {A::kCommutative, A::kHasNegation};
}

// Tally of ring operations performed through a Counting<> algebra. Negation
// is not an operation in this model; a subtraction costs one addition.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const { return adds + muls; }
  void reset() { adds = muls = 0; }
};

// Delegates to `Base` and tallies every add() and mul() into an external
// counter. Values are identical to the base algebra's.
template <Semiring Base>
class Counting {
 public:
  using Element = typename Base::Element;
  static constexpr bool kCommutative = Base::kCommutative;
  static constexpr bool kHasNegation = Base::kHasNegation;

  Counting(Base base, OpCounter& counter) : base_(std::move(base)), counter_(&counter) {}

  Element zero() const { return base_.zero(); }
  Element one() const { return base_.one(); }

  Element add(const Element& x, const Element& y) const {
    ++counter_->adds;
    return base_.add(x, y);
  }
  Element mul(const Element& x, const Element& y) const {
    ++counter_->muls;
    return base_.mul(x, y);
  }
  Element neg(const Element& x) const
    requires Base::kHasNegation
  {
    return base_.neg(x);
  }

  Element parse(std::string_view text) const { return base_.parse(text); }
  std::string render(const Element& x) const { return base_.render(x); }
  std::string name() const { return base_.name(); }

  const Base& base() const { return base_; }
  OpCounter& counter() const { return *counter_; }

 private:
  Base base_;
  OpCounter* counter_;
};

template <Semiring Base>
Counting<Base> make_counting(Base base, OpCounter& counter) {
  return Counting<Base>(std::move(base), counter);
}

// c-fold sum x + x + ... + x by binary doubling: floor(log2 c) doublings plus
// popcount(c) - 1 extra additions, so at most 2*floor(log2 c) additions.
template <Semiring A>
typename A::Element scalar_mul(std::uint64_t c, const typename A::Element& x, const A& alg) {
  if (c == 0) return alg.zero();
  int top = 63;
  while (((c >> top) & 1U) == 0) --top;
  typename A::Element acc = x;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = alg.add(acc, acc);
    if ((c >> bit) & 1U) acc = alg.add(acc, x);
  }
  return acc;
}

// Running sum that treats the first contribution as an assignment, so a sum
// of t terms costs t - 1 additions. Negative contributions go through neg().
template <Semiring A>
class Accumulator {
 public:
  using Element = typename A::Element;

  explicit Accumulator(const A& alg) : alg_(&alg) {}

  void add(const Element& x) {
    if (empty_) {
      value_ = x;
      empty_ = false;
    } else {
      value_ = alg_->add(value_, x);
    }
  }

  void add_signed(const Element& x, bool negative)
    requires A::kHasNegation
  {
    add(negative ? alg_->neg(x) : x);
  }

  bool empty() const { return empty_; }
  Element value() const { return empty_ ? alg_->zero() : value_; }

 private:
  const A* alg_;
  Element value_{};
  bool empty_ = true;
};

}  // namespace perm
