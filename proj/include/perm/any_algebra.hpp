#pragma once

// Runtime selection among the shipped algebras by selector string:
// int64, bigint, mod:<p>, tropical, mat2, mat2z.

#include <string>
#include <string_view>
#include <variant>

#include "perm/algebras.hpp"

namespace perm {

using AnyAlgebra = std::variant<Int64Ring, BigIntRing, ModRing, Tropical, Mat2, Mat2z>;

// Throws ParseError on an unknown selector or a malformed modulus.
AnyAlgebra parse_algebra(std::string_view selector);

Capabilities capabilities(const AnyAlgebra& alg);
std::string algebra_name(const AnyAlgebra& alg);

}  // namespace perm
