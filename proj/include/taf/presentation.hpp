#pragma once

// Builds finite rings from RingSpec presentations and maps polynomials in the
// presentation's variable to ring elements (and back, for printing).

#include <string>
#include <string_view>
#include <vector>

#include "taf/finite_ring.hpp"
#include "taf/ring_spec.hpp"

namespace taf {

/// Builds the ring named by `spec`. For an atom Z/n[x]/(f_1..f_m), the free
/// Z/n-module on 1..x^(e-1) (e = degree of the lowest-degree monic relation)
/// is cut down by the additive span of x^i f_j reduced modulo that relation.
/// Throws InputError("infinite presentation") or ("degenerate modulus").
FiniteRing construct(const RingSpec& spec);

class PresentedRing {
 public:
  explicit PresentedRing(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  const FiniteRing& ring() const { return ring_; }

  /// Image of a polynomial placed in one product factor (zero elsewhere).
  Elem from_poly(size_t atom, const Poly& p) const;
  /// Integer constant c, i.e. c * 1.
  Elem from_integer(int64_t c) const;

  /// Element syntax: a polynomial (single-factor rings, or integer constants
  /// in any ring) or a tuple "(p1; p2; ...)" with one entry per factor.
  Elem parse_element(std::string_view text) const;
  /// Comma-separated element list; an empty string yields no elements.
  std::vector<Elem> parse_elements(std::string_view text) const;

  /// Polynomial rendering of each component, tuple form for products.
  std::string format(Elem x) const;
  std::string format_ideal_gens(const FinIdeal& i) const;

 private:
  struct Atom {
    int64_t modulus = 0;
    std::string var;     // empty for Z/n
    IntVec monic;        // normalized monic relation, coefficient of x^e is 1
    size_t degree = 1;   // e
    size_t offset = 0;   // first coordinate of this factor in ring_
    LatticeRing lattice;
  };

  IntVec reduce_poly(const Atom& a, const Poly& p) const;
  static Atom build_atom(const AtomSpec& spec);

  RingSpec spec_;
  std::vector<Atom> atoms_;
  FiniteRing ring_;
};

}  // namespace taf
