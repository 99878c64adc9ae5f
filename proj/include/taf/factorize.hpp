#pragma once

// TA-factorization search over the lattice of ideals above a target, and
// whole-ring TAF audits with certificates in both directions.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "taf/absorbing.hpp"
#include "taf/finite_ring.hpp"

namespace taf {

/// A product of proper TA-ideals equal to its target.
struct TAFactorization {
  std::vector<FinIdeal> factors;
};

enum class NonTAFKind {
  ExhaustedSearch,        // the named ideal has no factorization; search was exhaustive
  IncomparableWithSquare  // sqrt(I) = M maximal while I and M^2 are incomparable
};

struct NonTAFCertificate {
  NonTAFKind kind = NonTAFKind::ExhaustedSearch;
  FinIdeal ideal;
  // IncomparableWithSquare only.
  std::optional<FinIdeal> maximal;
  std::optional<FinIdeal> maximal_square;
  std::optional<Elem> in_ideal_not_square;
  std::optional<Elem> in_square_not_ideal;
};

const char* to_string(NonTAFKind k);

/// Memoized depth-first search for factorizations over an abstract lattice of
/// ideals above a fixed base, identified by dense ids.
///
/// K has a factorization when K is TA, or when some proper TA-ideal J and some
/// ideal C, both containing K, satisfy J*C = K and C has one. Candidates are
/// tried in `order` (largest ideals first); C = K is a cycle and fails. Every
/// recursive step strictly enlarges the ideal, so the memo never sees a cycle.
class DivisorLatticeSearch {
 public:
  struct Callbacks {
    std::function<bool(size_t)> is_ta;
    std::function<bool(size_t, size_t)> subset;  // lattice[a] inside lattice[b]
    std::function<int(size_t, size_t)> product;  // id of the product, -1 when outside the lattice
  };

  DivisorLatticeSearch(std::vector<size_t> order, size_t unit_id, Callbacks callbacks);

  /// Ids of the factors of the first factorization in search order.
  std::optional<std::vector<size_t>> first(size_t k);
  /// Ids of the factors of a factorization with the fewest factors.
  std::optional<std::vector<size_t>> shortest(size_t k);

 private:
  enum class State : uint8_t { Unknown, InProgress, Failed, Solved };
  struct Step {
    State state = State::Unknown;
    int factor = -1;    // J
    int cofactor = -1;  // C, or -1 when K itself is TA
    int length = 0;
  };

  void prepare();
  bool solve_first(size_t k);
  bool solve_shortest(size_t k);
  std::vector<size_t> unwind(size_t k, const std::vector<Step>& steps) const;

  std::vector<size_t> order_;
  size_t unit_id_;
  Callbacks cb_;
  std::vector<size_t> proper_ta_;
  bool prepared_ = false;
  std::vector<Step> first_;
  std::vector<Step> shortest_;
};

/// Factorization search over the ideals of a finite ring containing `base`.
class FactorizationSearch {
 public:
  FactorizationSearch(const FiniteRing& r, const FinIdeal& base, const Limits& limits = {});

  std::optional<TAFactorization> first(const FinIdeal& target);
  std::optional<TAFactorization> shortest(const FinIdeal& target);

  const std::vector<FinIdeal>& lattice() const { return lattice_; }
  bool is_ta(size_t id);

 private:
  size_t checked_id(const FinIdeal& i) const;
  int product_id(size_t j, size_t c);
  TAFactorization collect(const std::vector<size_t>& ids) const;

  const FiniteRing& ring_;
  Limits limits_;
  std::vector<FinIdeal> lattice_;
  std::unordered_map<FinIdeal, size_t, FinIdealHash> ids_;
  std::vector<int8_t> ta_;  // -1 unknown
  std::unordered_map<uint64_t, int> products_;
  size_t unit_id_ = 0;
  DivisorLatticeSearch search_;
};

/// All ideals J with I contained in J (including I and R).
std::vector<FinIdeal> divisors_above(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {});

/// Throws InputError for the unit ideal (factors must be proper).
std::optional<TAFactorization> ta_factorization(const FiniteRing& r, const FinIdeal& i, const Limits& limits = {},
                                                bool shortest = false);

/// Each factor proper and TA, product equal to the target.
bool verify_factorization(const FiniteRing& r, const FinIdeal& target, const TAFactorization& f,
                          const Limits& limits = {});

struct TAFAudit {
  bool is_taf = false;
  std::optional<NonTAFCertificate> certificate;
  std::vector<std::pair<FinIdeal, TAFactorization>> table;  // every factorable proper ideal
};

TAFAudit is_taf(const FiniteRing& r, const Limits& limits = {});

/// An ideal I whose radical is a maximal ideal M while I and M^2 are
/// incomparable; any hit rules out the TAF property. First hit in canonical
/// ideal order.
std::optional<NonTAFCertificate> square_comparability_witness(const FiniteRing& r, const Limits& limits = {});

bool verify_certificate(const FiniteRing& r, const NonTAFCertificate& c, const Limits& limits = {});

}  // namespace taf
