#pragma once

// Finite commutative unital rings given by cyclic additive factors and
// structure constants, together with exhaustive ideal arithmetic.
//
// Elements are addressed by a dense index: the mixed-radix value of the
// reduced coefficient vector with coordinate 0 most significant, so index
// order is lexicographic order on coefficient vectors.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "taf/lattice.hpp"

namespace taf {

using Elem = uint32_t;

struct RingElement {
  std::vector<int64_t> coeffs;

  auto operator<=>(const RingElement&) const = default;
};

/// Size limits shared by every exhaustive procedure.
struct Limits {
  uint64_t enumeration_guard = 4096;
  uint64_t tuple_budget = 10'000'000;
};

class FiniteRing {
 public:
  /// Largest order addressable by an Elem index.
  static constexpr uint64_t kMaxOrder = uint64_t(1) << 30;

  /// Validates commutativity, associativity, unity, and compatibility of the
  /// structure constants with the additive orders; throws InputError naming
  /// the first failed check.
  FiniteRing(std::vector<int64_t> orders, std::vector<std::vector<IntVec>> mul_table, IntVec unity);

  /// The zero ring (rank 0, one element).
  static FiniteRing zero_ring();

  size_t rank() const { return orders_.size(); }
  const std::vector<int64_t>& orders() const { return orders_; }
  uint64_t order() const { return order_; }
  const IntVec& structure(size_t i, size_t j) const { return table_[i][j]; }
  const IntVec& unity_coeffs() const { return unity_; }
  /// lcm of the additive orders: exponent of the additive group.
  int64_t exponent() const { return exponent_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem basis(size_t i) const { return Elem(strides_[i]); }

  Elem index(const RingElement& e) const;
  Elem index(std::span<const int64_t> coeffs) const;
  RingElement element(Elem x) const;
  void decode(Elem x, std::span<int64_t> out) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, uint64_t n) const;
  Elem scale(Elem a, int64_t n) const;

  /// Multiplies raw (possibly unreduced) integer coefficient vectors.
  IntVec mul_vectors(const IntVec& a, const IntVec& b) const;

  bool operator==(const FiniteRing& o) const {
    return orders_ == o.orders_ && table_ == o.table_ && unity_ == o.unity_;
  }

 private:
  FiniteRing() = default;
  void init_strides();

  std::vector<int64_t> orders_;
  std::vector<uint64_t> strides_;
  std::vector<std::vector<IntVec>> table_;
  IntVec unity_;
  uint64_t order_ = 1;
  int64_t exponent_ = 1;
  Elem one_ = 0;
};

RingElement elem_add(const FiniteRing& r, const RingElement& a, const RingElement& b);
RingElement elem_mul(const FiniteRing& r, const RingElement& a, const RingElement& b);
RingElement elem_pow(const FiniteRing& r, const RingElement& a, uint64_t n);

/// An ideal in canonical form: the sorted full element list plus a membership
/// bitset. `gens` generate it as an ideal; `span` generate it as a group.
class FinIdeal {
 public:
  FinIdeal() = default;

  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& gens() const { return gens_; }
  const std::vector<Elem>& span() const { return span_; }
  const std::vector<uint64_t>& bits() const { return bits_; }
  size_t size() const { return elements_.size(); }
  bool contains(Elem x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
  bool subset_of(const FinIdeal& o) const;

  bool operator==(const FinIdeal& o) const { return bits_ == o.bits_; }
  /// Canonical order: by size, then lexicographically by element list.
  std::strong_ordering operator<=>(const FinIdeal& o) const;

 private:
  friend class IdealClosure;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
  std::vector<Elem> span_;
  std::vector<uint64_t> bits_;
};

struct FinIdealHash {
  size_t operator()(const FinIdeal& i) const noexcept;
};

FinIdeal ideal_generate(const FiniteRing& r, std::span<const Elem> gens);
FinIdeal ideal_generate(const FiniteRing& r, const std::vector<RingElement>& gens);
/// Wraps a set already known to be an ideal (checked).
FinIdeal ideal_from_elements(const FiniteRing& r, std::span<const Elem> elements);
FinIdeal ideal_unit(const FiniteRing& r);
FinIdeal ideal_zero(const FiniteRing& r);
FinIdeal ideal_sum(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j);
FinIdeal ideal_product(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j);
FinIdeal ideal_intersection(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j);
FinIdeal ideal_radical(const FiniteRing& r, const FinIdeal& i);
bool is_proper(const FiniteRing& r, const FinIdeal& i);

bool is_prime(const FiniteRing& r, const FinIdeal& i);
bool is_maximal(const FiniteRing& r, const FinIdeal& i);
bool is_primary(const FiniteRing& r, const FinIdeal& i);

/// Every ideal of r containing `base`, canonically ordered (includes base and r).
std::vector<FinIdeal> ideals_containing(const FiniteRing& r, const FinIdeal& base, const Limits& limits = {});
std::vector<FinIdeal> enumerate_ideals(const FiniteRing& r, const Limits& limits = {});
/// Serial reference for the principal-ideal sweep that seeds enumeration.
std::vector<FinIdeal> principal_ideals_serial(const FiniteRing& r);
std::vector<FinIdeal> principal_ideals(const FiniteRing& r);

std::vector<FinIdeal> min_primes(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {});

/// A ring built as Z^k / L with structure constants transported from an
/// ambient bilinear product; `map` sends ambient vectors to the new ring.
struct LatticeRing {
  FiniteRing ring;
  CyclicDecomposition map;

  Elem image(const IntVec& ambient) const { return ring.index(map.project(ambient)); }
};

using VectorProduct = std::function<IntVec(const IntVec&, const IntVec&)>;

LatticeRing ring_from_lattice(size_t rank, const VectorProduct& mul, const IntVec& unity,
                              const std::vector<IntVec>& relations);

/// R/I with the canonical surjection.
struct QuotientRing {
  LatticeRing lattice;

  const FiniteRing& ring() const { return lattice.ring; }
  Elem image(const FiniteRing& source, Elem x) const;
};

QuotientRing quotient_ring(const FiniteRing& r, const FinIdeal& i);
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

std::vector<Elem> idempotents(const FiniteRing& r, const Limits& limits = {});
std::vector<Elem> primitive_idempotents(const FiniteRing& r, const Limits& limits = {});
/// Local factors eR, one per primitive idempotent e, each with unity e.
std::vector<QuotientRing> decompose(const FiniteRing& r, const Limits& limits = {});

/// True when r is isomorphic to Z/n: additive order n generated by 1.
bool is_isomorphic_to_zn(const FiniteRing& r, int64_t n);
bool is_field(const FiniteRing& r);

/// Coefficient-vector rendering, e.g. "[3,1]".
std::string format_coeffs(const FiniteRing& r, Elem x);

void require_within_guard(const FiniteRing& r, const Limits& limits);

}  // namespace taf
