#pragma once

// The six shipped algebra instances.
//
//   selector   class        structure
//   int64      Int64Ring    commutative ring, checked overflow
//   bigint     BigIntRing   commutative ring
//   mod:<p>    ModRing      commutative ring Z/pZ, any p >= 2
//   tropical   Tropical     commutative semiring (min, +), zero = inf
//   mat2       Mat2         noncommutative semiring, 2x2 over N
//   mat2z      Mat2z        noncommutative ring, 2x2 over Z

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "perm/algebra.hpp"

namespace perm {

using BigInt = boost::multiprecision::cpp_int;

// Strict signed decimal: optional '-', then one or more digits.
bool is_decimal_token(std::string_view text);
BigInt parse_bigint(std::string_view text);

class Int64Ring {
 public:
  using Element = std::int64_t;
  static constexpr bool kCommutative = true;
  static constexpr bool kHasNegation = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element neg(Element x) const;
  Element parse(std::string_view text) const;
  std::string render(Element x) const { return std::to_string(x); }
  std::string name() const { return "int64"; }
};

class BigIntRing {
 public:
  using Element = BigInt;
  static constexpr bool kCommutative = true;
  static constexpr bool kHasNegation = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  Element neg(const Element& x) const { return -x; }
  Element parse(std::string_view text) const { return parse_bigint(text); }
  std::string render(const Element& x) const { return x.str(); }
  std::string name() const { return "bigint"; }
};

// Integers modulo p; p need not be prime. Elements are canonical residues in
// [0, p). Parsing accepts any signed decimal and reduces it.
class ModRing {
 public:
  using Element = std::uint64_t;
  static constexpr bool kCommutative = true;
  static constexpr bool kHasNegation = true;
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit ModRing(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element add(Element x, Element y) const {
    Element s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Element mul(Element x, Element y) const {
    return static_cast<Element>((static_cast<unsigned __int128>(x) * y) % p_);
  }
  Element neg(Element x) const { return x == 0 ? 0 : p_ - x; }
  Element parse(std::string_view text) const;
  std::string render(Element x) const { return std::to_string(x); }
  std::string name() const { return "mod:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

struct TropicalValue {
  bool infinite = true;
  std::int64_t value = 0;

  static TropicalValue inf() { return {true, 0}; }
  static TropicalValue finite(std::int64_t v) { return {false, v}; }

  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Min-plus semiring: add = min, mul = numeric +, zero = +inf, one = 0.
// Finite sums use checked arithmetic.
class Tropical {
 public:
  using Element = TropicalValue;
  static constexpr bool kCommutative = true;
  static constexpr bool kHasNegation = false;

  Element zero() const { return TropicalValue::inf(); }
  Element one() const { return TropicalValue::finite(0); }
  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element parse(std::string_view text) const;
  std::string render(const Element& x) const;
  std::string name() const { return "tropical"; }
};

// Row-major 2x2 matrix {a, b, c, d} = [[a, b], [c, d]].
using Mat2Value = std::array<BigInt, 4>;

namespace detail {

template <bool kSigned>
class Mat2Algebra {
 public:
  using Element = Mat2Value;
  static constexpr bool kCommutative = false;
  static constexpr bool kHasNegation = kSigned;

  Element zero() const { return {0, 0, 0, 0}; }
  Element one() const { return {1, 0, 0, 1}; }
  Element add(const Element& x, const Element& y) const {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
  }
  Element mul(const Element& x, const Element& y) const {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  }
  Element neg(const Element& x) const
    requires kSigned
  {
    return {-x[0], -x[1], -x[2], -x[3]};
  }
  Element parse(std::string_view text) const;
  std::string render(const Element& x) const;
  std::string name() const { return kSigned ? "mat2z" : "mat2"; }
};

extern template class Mat2Algebra<false>;
extern template class Mat2Algebra<true>;

}  // namespace detail

using Mat2 = detail::Mat2Algebra<false>;
using Mat2z = detail::Mat2Algebra<true>;

// Matrix units E_ij with a single 1 at (i, j), 1-based.
Mat2Value mat2_unit(int row, int col);

}  // namespace perm
