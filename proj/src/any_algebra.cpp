#include "perm/any_algebra.hpp"

#include <charconv>

#include "perm/error.hpp"

namespace perm {

AnyAlgebra parse_algebra(std::string_view selector) {
  if (selector == "int64") return Int64Ring{};
  if (selector == "bigint") return BigIntRing{};
  if (selector == "tropical") return Tropical{};
  if (selector == "mat2") return Mat2{};
  if (selector == "mat2z") return Mat2z{};
  constexpr std::string_view kModPrefix = "mod:";
  if (selector.substr(0, kModPrefix.size()) == kModPrefix) {
    std::string_view digits = selector.substr(kModPrefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("malformed modulus in '" + std::string(selector) + "'");
    try {
      return ModRing(p);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown algebra '" + std::string(selector) +
                   "' (expected int64, bigint, mod:<p>, tropical, mat2, mat2z)");
}

Capabilities capabilities(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return capabilities_of<std::decay_t<decltype(a)>>(); }, alg);
}

std::string algebra_name(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return a.name(); }, alg);
}

}  // namespace perm
