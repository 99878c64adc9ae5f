#pragma once

// Text presentations of finite rings:
//
//   ringspec := atom (" x " atom)*
//   atom     := "Z/" NAT | "Z/" NAT "[" IDENT "]" "/(" poly ("," poly)* ")"
//
// Polynomials are univariate with integer coefficients and accept `^`,
// implicit multiplication (`2x`, `3 x^2`) and explicit `*`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taf {

/// Dense univariate integer polynomial; coeffs[i] multiplies var^i. No trailing zeros.
struct Poly {
  std::vector<int64_t> coeffs;

  int degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }
  bool operator==(const Poly&) const = default;
};

struct AtomSpec {
  int64_t modulus = 0;
  std::optional<std::string> var;
  std::vector<Poly> relations;

  bool operator==(const AtomSpec&) const = default;
};

struct RingSpec {
  std::vector<AtomSpec> atoms;

  bool operator==(const RingSpec&) const = default;
};

/// Parses a ring presentation. Throws InputError with the offending position,
/// or naming the monic-relation rule when a variable has no monic relation.
RingSpec parse_ringspec(std::string_view text);

/// Parses a polynomial in `var` (any identifier is rejected except `var`).
Poly parse_poly(std::string_view text, std::string_view var);

std::string to_string(const Poly& p, std::string_view var);
std::string to_string(const AtomSpec& a);
std::string to_string(const RingSpec& s);

}  // namespace taf
