#pragma once

// Decision procedures for 2-absorbing (TA) and n-absorbing ideals of finite
// rings, plus the prime-square / two-primes structure of TA-ideals.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "taf/finite_ring.hpp"

namespace taf {

/// abc in I while ab, ac, bc are not.
struct TAWitness {
  Elem a, b, c;
  bool operator==(const TAWitness&) const = default;
};

struct TAResult {
  bool is_ta = false;
  std::optional<TAWitness> witness;
};

/// Multiplication table of R/I over coset classes. Classes are numbered by
/// their least representative in R, so class order matches element order on
/// representatives; class 0 is I itself.
struct CosetTable {
  size_t classes = 0;
  std::vector<Elem> rep;           // class -> least representative
  std::vector<uint32_t> class_of;  // element -> class
  std::vector<uint16_t> product;   // classes x classes
  std::vector<uint32_t> nonunits;  // nonzero non-unit classes, ascending

  uint32_t mul(uint32_t a, uint32_t b) const { return product[size_t(a) * classes + b]; }
};

CosetTable coset_table(const FiniteRing& r, const FinIdeal& i);

/// Lexicographically first class triple a <= b <= c refuting the TA property
/// of the zero class, or nothing. The serial and OpenMP kernels agree exactly.
std::optional<std::array<uint32_t, 3>> find_ta_witness_serial(const CosetTable& t);
std::optional<std::array<uint32_t, 3>> find_ta_witness_parallel(const CosetTable& t);

/// Brute force over triples (with early exit). Throws InputError for I = R and
/// LimitExceeded beyond the enumeration guard. The reported witness is the
/// first refuting triple a <= b <= c in element order.
TAResult ta_check(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {});
TAResult ta_check_serial(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {});

bool verify_ta_witness(const FiniteRing& r, const FinIdeal& i, const TAWitness& w);

struct NAbsorbingResult {
  bool holds = false;
  std::optional<std::vector<Elem>> witness;  // n+1 factors
};

/// Whether every (n+1)-fold product in I has an n-fold subproduct in I.
/// Throws LimitExceeded when the tuple space exceeds `limits.tuple_budget`.
NAbsorbingResult n_absorbing_check(const FiniteRing& r, const FinIdeal& i, unsigned n, const Limits& limits = {});

enum class TAKind { PrimeSquare, TwoPrimes };

struct TAStructure {
  TAKind kind = TAKind::PrimeSquare;
  std::vector<FinIdeal> primes;  // one for PrimeSquare, two for TwoPrimes
};

/// Radical of a TA-ideal is a prime P with P^2 in I, or an intersection of two
/// incomparable primes whose product lies in I. Throws InputError when I is
/// not TA and std::logic_error if neither shape fits.
TAStructure ta_structure(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {});

/// Re-derives every invariant of `s` from scratch.
bool verify_ta_structure(const FiniteRing& r, const FinIdeal& i, const TAStructure& s);

const char* to_string(TAKind k);

}  // namespace taf
