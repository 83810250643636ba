#pragma once

// Seeded element and matrix generation. Streams are SplitMix64; the stream
// for trial t under seed s is SplitMix64(s ^ t). A bounded draw in [0, hi] is
// next() % (hi + 1). Matrices are filled row-major; a mat2 entry draws its
// four cells in row-major order.

#include <cstdint>
#include <vector>

#include "perm/algebras.hpp"
#include "perm/matrix.hpp"

namespace perm {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below_or_equal(std::uint64_t hi) { return next() % (hi + 1); }

 private:
  std::uint64_t state_;
};

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) { return SplitMix64(seed ^ trial); }

inline constexpr std::uint64_t kIntegerSampleMax = 10;
inline constexpr std::uint64_t kMat2SampleMax = 3;
inline constexpr std::uint64_t kTropicalSampleMax = 100;

inline Int64Ring::Element sample_element(const Int64Ring&, SplitMix64& rng) {
  return static_cast<std::int64_t>(rng.below_or_equal(kIntegerSampleMax));
}
inline BigIntRing::Element sample_element(const BigIntRing&, SplitMix64& rng) {
  return BigInt(rng.below_or_equal(kIntegerSampleMax));
}
inline ModRing::Element sample_element(const ModRing& alg, SplitMix64& rng) {
  return rng.below_or_equal(kIntegerSampleMax) % alg.modulus();
}
inline Tropical::Element sample_element(const Tropical&, SplitMix64& rng) {
  return TropicalValue::finite(static_cast<std::int64_t>(rng.below_or_equal(kTropicalSampleMax)));
}
template <bool kSigned>
Mat2Value sample_element(const detail::Mat2Algebra<kSigned>&, SplitMix64& rng) {
  Mat2Value v;
  for (auto& cell : v) cell = BigInt(rng.below_or_equal(kMat2SampleMax));
  return v;
}

template <class A>
concept Samplable = Semiring<A> && requires(const A& a, SplitMix64& rng) {
  { sample_element(a, rng) } -> std::same_as<typename A::Element>;
};

template <Samplable A>
Matrix<A> random_matrix(const A& alg, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  std::vector<typename A::Element> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(sample_element(alg, rng));
  return Matrix<A>(alg, rows, cols, std::move(entries));
}

// Counting<> wraps share their base algebra's sampler.
template <Samplable Base>
typename Base::Element sample_element(const Counting<Base>& alg, SplitMix64& rng) {
  return sample_element(alg.base(), rng);
}

}  // namespace perm
