#include "taf/absorbing.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "taf/checked.hpp"

namespace taf {

namespace {

constexpr size_t kMaxTableClasses = 8192;
constexpr size_t kParallelThreshold = 48;

constexpr uint32_t kUnassigned = std::numeric_limits<uint32_t>::max();

void require_proper(const FiniteRing& r, const FinIdeal& i) {
  if (!is_proper(r, i)) throw InputError("TA is defined for proper ideals");
}

// Search for the first witness with a fixed first factor.
std::optional<std::array<uint32_t, 3>> search_from(const CosetTable& t, size_t ia) {
  const auto& nu = t.nonunits;
  const uint32_t a = nu[ia];
  for (size_t ib = ia; ib < nu.size(); ++ib) {
    const uint32_t b = nu[ib];
    const uint32_t ab = t.mul(a, b);
    if (ab == 0) continue;
    for (size_t ic = ib; ic < nu.size(); ++ic) {
      const uint32_t c = nu[ic];
      if (t.mul(ab, c) == 0 && t.mul(a, c) != 0 && t.mul(b, c) != 0) return std::array{a, b, c};
    }
  }
  return std::nullopt;
}

TAResult to_result(const CosetTable& t, const std::optional<std::array<uint32_t, 3>>& w) {
  if (!w) return {true, std::nullopt};
  return {false, TAWitness{t.rep[(*w)[0]], t.rep[(*w)[1]], t.rep[(*w)[2]]}};
}

}  // namespace

CosetTable coset_table(const FiniteRing& r, const FinIdeal& i) {
  CosetTable t;
  const uint64_t n = r.order();
  t.class_of.assign(size_t(n), kUnassigned);
  for (Elem x = 0; x < n; ++x) {
    if (t.class_of[x] != kUnassigned) continue;
    const auto c = uint32_t(t.rep.size());
    t.rep.push_back(x);
    for (Elem y : i.elements()) t.class_of[r.add(x, y)] = c;
  }
  t.classes = t.rep.size();
  if (t.classes > kMaxTableClasses) throw LimitExceeded("quotient too large for a dense coset table");
  const size_t m = t.classes;
  t.product.assign(m * m, 0);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      const auto c = uint16_t(t.class_of[r.mul(t.rep[a], t.rep[b])]);
      t.product[a * m + b] = t.product[b * m + a] = c;
    }
  const uint32_t one = t.class_of[r.one()];
  for (uint32_t a = 1; a < m; ++a) {
    bool unit = false;
    for (uint32_t b = 1; b < m && !unit; ++b) unit = t.mul(a, b) == one;
    if (!unit) t.nonunits.push_back(a);
  }
  return t;
}

std::optional<std::array<uint32_t, 3>> find_ta_witness_serial(const CosetTable& t) {
  for (size_t ia = 0; ia < t.nonunits.size(); ++ia)
    if (auto w = search_from(t, ia)) return w;
  return std::nullopt;
}

std::optional<std::array<uint32_t, 3>> find_ta_witness_parallel(const CosetTable& t) {
  const auto count = static_cast<int64_t>(t.nonunits.size());
  std::atomic<int64_t> best{count};
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t ia = 0; ia < count; ++ia) {
    if (ia >= best.load(std::memory_order_relaxed)) continue;
    if (search_from(t, size_t(ia))) {
      int64_t cur = best.load();
      while (ia < cur && !best.compare_exchange_weak(cur, ia)) {
      }
    }
  }
  // The smallest first factor with any witness fixes the canonical triple.
  if (best.load() == count) return std::nullopt;
  return search_from(t, size_t(best.load()));
}

TAResult ta_check(const FiniteRing& r, const FinIdeal& i, const Limits& limits) {
  require_proper(r, i);
  require_within_guard(r, limits);
  const CosetTable t = coset_table(r, i);
  return to_result(t, t.nonunits.size() >= kParallelThreshold ? find_ta_witness_parallel(t)
                                                              : find_ta_witness_serial(t));
}

TAResult ta_check_serial(const FiniteRing& r, const FinIdeal& i, const Limits& limits) {
  require_proper(r, i);
  require_within_guard(r, limits);
  const CosetTable t = coset_table(r, i);
  return to_result(t, find_ta_witness_serial(t));
}

bool verify_ta_witness(const FiniteRing& r, const FinIdeal& i, const TAWitness& w) {
  const Elem ab = r.mul(w.a, w.b), ac = r.mul(w.a, w.c), bc = r.mul(w.b, w.c);
  return i.contains(r.mul(ab, w.c)) && !i.contains(ab) && !i.contains(ac) && !i.contains(bc);
}

// ---------------------------------------------------------------- n-absorbing

namespace {

struct TupleSearch {
  const CosetTable& t;
  unsigned width;  // n + 1
  uint64_t budget;
  uint64_t spent = 0;
  std::vector<uint32_t> chosen;

  bool refutes() const {
    // Every product omitting one factor must stay outside the zero class.
    for (size_t skip = 0; skip < chosen.size(); ++skip) {
      uint32_t p = 0;
      bool first = true;
      for (size_t k = 0; k < chosen.size(); ++k) {
        if (k == skip) continue;
        p = first ? chosen[k] : t.mul(p, chosen[k]);
        first = false;
      }
      if (p == 0) return false;
    }
    return true;
  }

  bool descend(size_t from, uint32_t prefix) {
    for (size_t k = from; k < t.nonunits.size(); ++k) {
      const uint32_t x = t.nonunits[k];
      const uint32_t next = chosen.empty() ? x : t.mul(prefix, x);
      chosen.push_back(x);
      // every partial tuple counts against the budget
      if (++spent > budget) throw LimitExceeded("n-absorbing check too large");
      if (chosen.size() == width) {
        if (next == 0 && refutes()) return true;
      } else if (next != 0 && descend(k, next)) {
        return true;
      }
      // A zero prefix would make the product omitting the last factor vanish.
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

NAbsorbingResult n_absorbing_check(const FiniteRing& r, const FinIdeal& i, unsigned n, const Limits& limits) {
  if (n < 1) throw InputError("n-absorbing requires n >= 1");
  require_proper(r, i);
  require_within_guard(r, limits);
  const CosetTable t = coset_table(r, i);
  TupleSearch s{t, n + 1, limits.tuple_budget, 0, {}};
  if (!s.descend(0, 0)) return {true, std::nullopt};
  std::vector<Elem> w;
  for (uint32_t c : s.chosen) w.push_back(t.rep[c]);
  return {false, std::move(w)};
}

// ---------------------------------------------------------------- structure

TAStructure ta_structure(const FiniteRing& r, const FinIdeal& i, const Limits& limits) {
  if (!ta_check(r, i, limits).is_ta) throw InputError("not a TA-ideal");
  const FinIdeal rad = ideal_radical(r, i);
  auto primes = min_primes(r, i, limits);
  if (primes.size() == 1 && primes[0] == rad) {
    if (!ideal_product(r, primes[0], primes[0]).subset_of(i))
      throw std::logic_error("TA-ideal with prime radical P but P^2 not contained: contradicts structure theorem");
    return {TAKind::PrimeSquare, std::move(primes)};
  }
  if (primes.size() == 2) {
    const auto& p1 = primes[0];
    const auto& p2 = primes[1];
    const bool ok = rad == ideal_intersection(r, p1, p2) && !p1.subset_of(p2) && !p2.subset_of(p1) &&
                    ideal_product(r, p1, p2).subset_of(i);
    if (ok) return {TAKind::TwoPrimes, std::move(primes)};
  }
  throw std::logic_error("TA-ideal fits neither prime-square nor two-primes shape: contradicts structure theorem");
}

bool verify_ta_structure(const FiniteRing& r, const FinIdeal& i, const TAStructure& s) {
  const FinIdeal rad = ideal_radical(r, i);
  for (const auto& p : s.primes)
    if (!is_prime(r, p)) return false;
  if (s.kind == TAKind::PrimeSquare) {
    return s.primes.size() == 1 && rad == s.primes[0] && ideal_product(r, s.primes[0], s.primes[0]).subset_of(i);
  }
  if (s.primes.size() != 2) return false;
  const auto& p1 = s.primes[0];
  const auto& p2 = s.primes[1];
  return rad == ideal_intersection(r, p1, p2) && !p1.subset_of(p2) && !p2.subset_of(p1) &&
         ideal_product(r, p1, p2).subset_of(i);
}

const char* to_string(TAKind k) { return k == TAKind::PrimeSquare ? "prime-square" : "two-primes"; }

}  // namespace taf
