#pragma once

#include <random>
#include <string>
#include <vector>

#include "taf/finite_ring.hpp"
#include "taf/presentation.hpp"
#include "taf/ring_spec.hpp"

namespace taf::test {

inline PresentedRing presented(const std::string& text) { return PresentedRing(parse_ringspec(text)); }

inline FiniteRing ring(const std::string& text) { return construct(parse_ringspec(text)); }

inline FinIdeal ideal(const PresentedRing& p, const std::string& gens) {
  const auto g = p.parse_elements(gens);
  return ideal_generate(p.ring(), std::span<const Elem>(g));
}

/// Small rings used by the property suites; every order stays below 100.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> c{
      "Z/2",          "Z/3",          "Z/4",       "Z/2[x]/(x^2)", "Z/2[x]/(x^2+x+1)",
      "Z/8",          "Z/9",          "Z/8[x]/(x^2, 2x)", "Z/27",  "Z/6"};
  return c;
}

/// Seeded engine so failures replay.
inline std::mt19937_64 rng(uint64_t salt = 0) { return std::mt19937_64(0x5eed0000ULL + salt); }

}  // namespace taf::test
