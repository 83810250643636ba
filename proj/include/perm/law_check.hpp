#pragma once

// Randomized check of the semiring axioms the permanent algorithms rely on.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/error.hpp"
#include "perm/random.hpp"

namespace perm {

struct AxiomResult {
  std::string axiom;
  bool holds = true;
  std::size_t checked = 0;
  std::string witness;  // first violating tuple, rendered
};

struct LawReport {
  std::string algebra;
  std::vector<AxiomResult> axioms;
  // For noncommutative algebras: a pair with mul(x, y) != mul(y, x).
  std::optional<std::string> noncommutativity_witness;

  bool all_hold() const {
    for (const auto& a : axioms)
      if (!a.holds) return false;
    return true;
  }

  const AxiomResult* find(const std::string& axiom) const {
    for (const auto& a : axioms)
      if (a.axiom == axiom) return &a;
    return nullptr;
  }

  void require() const {
    for (const auto& a : axioms)
      if (!a.holds) throw LawViolation(algebra + ": axiom '" + a.axiom + "' fails at " + a.witness);
  }
};

namespace detail {

class LawTally {
 public:
  explicit LawTally(std::vector<AxiomResult>& out) : out_(out) {}

  AxiomResult& operator[](const std::string& axiom) {
    for (auto& a : out_)
      if (a.axiom == axiom) return a;
    out_.push_back({axiom, true, 0, {}});
    return out_.back();
  }

  template <class WitnessFn>
  void record(const std::string& axiom, bool ok, WitnessFn&& witness) {
    AxiomResult& r = (*this)[axiom];
    ++r.checked;
    if (!ok && r.holds) {
      r.holds = false;
      r.witness = witness();
    }
  }

 private:
  std::vector<AxiomResult>& out_;
};

}  // namespace detail

template <Semiring A, class Sampler>
LawReport law_check(const A& alg, Sampler&& sampler, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("law_check needs at least one trial");
  using E = typename A::Element;
  LawReport report{alg.name(), {}, std::nullopt};
  detail::LawTally tally(report.axioms);
  SplitMix64 rng(seed);
  const E zero = alg.zero();
  const E one = alg.one();

  for (std::size_t t = 0; t < trials; ++t) {
    E x = sampler(rng);
    E y = sampler(rng);
    E z = sampler(rng);
    auto show1 = [&] { return "x=" + alg.render(x); };
    auto show2 = [&] { return "x=" + alg.render(x) + " y=" + alg.render(y); };
    auto show3 = [&] { return "x=" + alg.render(x) + " y=" + alg.render(y) + " z=" + alg.render(z); };

    tally.record("add associative", alg.add(alg.add(x, y), z) == alg.add(x, alg.add(y, z)), show3);
    tally.record("add commutative", alg.add(x, y) == alg.add(y, x), show2);
    tally.record("mul associative", alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)), show3);
    tally.record("left distributive", alg.mul(x, alg.add(y, z)) == alg.add(alg.mul(x, y), alg.mul(x, z)), show3);
    tally.record("right distributive", alg.mul(alg.add(x, y), z) == alg.add(alg.mul(x, z), alg.mul(y, z)), show3);
    tally.record("zero is additive identity", alg.add(x, zero) == x && alg.add(zero, x) == x, show1);
    tally.record("zero annihilates", alg.mul(x, zero) == zero && alg.mul(zero, x) == zero, show1);
    tally.record("one is multiplicative identity", alg.mul(x, one) == x && alg.mul(one, x) == x, show1);
    tally.record("render/parse round trip", alg.parse(alg.render(x)) == x, show1);
    if constexpr (A::kHasNegation) tally.record("additive inverse", alg.add(x, alg.neg(x)) == zero, show1);

    bool commute = alg.mul(x, y) == alg.mul(y, x);
    if constexpr (A::kCommutative) {
      tally.record("mul commutative", commute, show2);
    } else if (!commute && !report.noncommutativity_witness) {
      report.noncommutativity_witness = show2();
    }
  }
  return report;
}

template <Samplable A>
LawReport law_check(const A& alg, std::size_t trials, std::uint64_t seed) {
  return law_check(alg, [&alg](SplitMix64& rng) { return sample_element(alg, rng); }, trials, seed);
}

}  // namespace perm
