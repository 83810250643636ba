#include "perm/algebras.hpp"

#include <charconv>
#include <limits>

#include "perm/error.hpp"

namespace perm {

namespace {

std::string quoted(std::string_view text) { return "'" + std::string(text) + "'"; }

std::int64_t parse_int64(std::string_view text) {
  if (!is_decimal_token(text)) throw ParseError("not a decimal integer: " + quoted(text));
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of int64 range: " + quoted(text));
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw ParseError("not a decimal integer: " + quoted(text));
  return v;
}

}  // namespace

bool is_decimal_token(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_token(text)) throw ParseError("not a decimal integer: " + quoted(text));
  bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  BigInt v{std::string(text)};
  return negative ? BigInt(-v) : v;
}

Int64Ring::Element Int64Ring::add(Element x, Element y) const {
  Element r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

Int64Ring::Element Int64Ring::mul(Element x, Element y) const {
  Element r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

Int64Ring::Element Int64Ring::neg(Element x) const {
  if (x == std::numeric_limits<Element>::min()) throw OverflowError("int64 overflow in negation");
  return -x;
}

Int64Ring::Element Int64Ring::parse(std::string_view text) const { return parse_int64(text); }

ModRing::ModRing(std::uint64_t modulus) : p_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus)
    throw DomainError("modulus must lie in [2, 2^62], got " + std::to_string(modulus));
}

ModRing::Element ModRing::parse(std::string_view text) const {
  if (!is_decimal_token(text)) throw ParseError("not a decimal integer: " + quoted(text));
  bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  std::uint64_t r = 0;
  for (char c : text) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * 10 + (c - '0')) % p_);
  return negative ? neg(r) : r;
}

Tropical::Element Tropical::add(const Element& x, const Element& y) const {
  if (x.infinite) return y;
  if (y.infinite) return x;
  return x.value <= y.value ? x : y;
}

Tropical::Element Tropical::mul(const Element& x, const Element& y) const {
  if (x.infinite || y.infinite) return TropicalValue::inf();
  std::int64_t r;
  if (__builtin_add_overflow(x.value, y.value, &r)) throw OverflowError("int64 overflow in tropical product");
  return TropicalValue::finite(r);
}

Tropical::Element Tropical::parse(std::string_view text) const {
  if (text == "inf") return TropicalValue::inf();
  return TropicalValue::finite(parse_int64(text));
}

std::string Tropical::render(const Element& x) const { return x.infinite ? "inf" : std::to_string(x.value); }

namespace detail {

template <bool kSigned>
typename Mat2Algebra<kSigned>::Element Mat2Algebra<kSigned>::parse(std::string_view text) const {
  Element out;
  std::string_view rest = text;
  for (int cell = 0; cell < 4; ++cell) {
    auto comma = rest.find(',');
    if ((cell < 3) != (comma != std::string_view::npos))
      throw ParseError("expected four comma-separated entries: " + quoted(text));
    std::string_view token = rest.substr(0, comma);
    out[cell] = parse_bigint(token);
    if (!kSigned && out[cell] < 0) throw ParseError("mat2 entries must be nonnegative: " + quoted(text));
    rest = cell < 3 ? rest.substr(comma + 1) : std::string_view{};
  }
  return out;
}

template <bool kSigned>
std::string Mat2Algebra<kSigned>::render(const Element& x) const {
  return x[0].str() + "," + x[1].str() + "," + x[2].str() + "," + x[3].str();
}

template class Mat2Algebra<false>;
template class Mat2Algebra<true>;

}  // namespace detail

Mat2Value mat2_unit(int row, int col) {
  Mat2Value e{0, 0, 0, 0};
  e[(row - 1) * 2 + (col - 1)] = 1;
  return e;
}

}  // namespace perm
