#include "taf/finite_ring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "taf/checked.hpp"

namespace taf {

namespace {

constexpr size_t kMaxRank = 30;  // every factor has order >= 2 and |R| <= 2^30

using CoeffBuf = std::array<int64_t, kMaxRank>;

int64_t lcm64(int64_t a, int64_t b) { return checked_mul(a / gcd64(a, b), b); }

}  // namespace

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(std::vector<int64_t> orders, std::vector<std::vector<IntVec>> mul_table, IntVec unity)
    : orders_(std::move(orders)), table_(std::move(mul_table)), unity_(std::move(unity)) {
  const size_t k = orders_.size();
  if (k > kMaxRank) throw InputError("ring rank exceeds " + std::to_string(kMaxRank));
  order_ = 1;
  exponent_ = 1;
  for (int64_t d : orders_) {
    if (d < 2) throw InputError("additive orders must be >= 2");
    order_ *= uint64_t(d);
    if (order_ > kMaxOrder) throw LimitExceeded("ring order exceeds addressable limit");
    exponent_ = lcm64(exponent_, d);
  }
  if (table_.size() != k || unity_.size() != k) throw InputError("structure constants have wrong shape");
  for (size_t i = 0; i < k; ++i) {
    if (table_[i].size() != k) throw InputError("structure constants have wrong shape");
    for (size_t j = 0; j < k; ++j) {
      if (table_[i][j].size() != k) throw InputError("structure constants have wrong shape");
      for (size_t l = 0; l < k; ++l) table_[i][j][l] = mod_floor(table_[i][j][l], orders_[l]);
    }
  }
  for (size_t l = 0; l < k; ++l) unity_[l] = mod_floor(unity_[l], orders_[l]);
  init_strides();

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (table_[i][j] != table_[j][i]) {
        throw InputError("commutativity check failed for basis pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      for (size_t l = 0; l < k; ++l) {
        if (checked_mul(orders_[i], table_[i][j][l]) % orders_[l] != 0)
          throw InputError("structure constants incompatible with additive orders");
      }
    }
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < k; ++l) {
        Elem lhs = mul(mul(basis(i), basis(j)), basis(l));
        Elem rhs = mul(basis(i), mul(basis(j), basis(l)));
        if (lhs != rhs) {
          throw InputError("associativity check failed for basis triple (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(l) + ")");
        }
      }
  one_ = index(std::span<const int64_t>(unity_));
  for (size_t i = 0; i < k; ++i) {
    if (mul(one_, basis(i)) != basis(i)) throw InputError("unity check failed for basis element " + std::to_string(i));
  }
}

FiniteRing FiniteRing::zero_ring() {
  FiniteRing r;
  r.init_strides();
  return r;
}

void FiniteRing::init_strides() {
  strides_.assign(orders_.size(), 1);
  for (size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * uint64_t(orders_[i]);
}

Elem FiniteRing::index(std::span<const int64_t> coeffs) const {
  if (coeffs.size() != rank()) throw InputError("element has wrong number of coefficients");
  uint64_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) idx += uint64_t(mod_floor(coeffs[i], orders_[i])) * strides_[i];
  return Elem(idx);
}

Elem FiniteRing::index(const RingElement& e) const { return index(std::span<const int64_t>(e.coeffs)); }

void FiniteRing::decode(Elem x, std::span<int64_t> out) const {
  uint64_t v = x;
  for (size_t i = rank(); i-- > 0;) {
    out[i] = int64_t(v % uint64_t(orders_[i]));
    v /= uint64_t(orders_[i]);
  }
}

RingElement FiniteRing::element(Elem x) const {
  RingElement e{std::vector<int64_t>(rank())};
  decode(x, e.coeffs);
  return e;
}

Elem FiniteRing::add(Elem a, Elem b) const {
  CoeffBuf ca, cb;
  decode(a, ca);
  decode(b, cb);
  uint64_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) {
    int64_t s = ca[i] + cb[i];
    if (s >= orders_[i]) s -= orders_[i];
    idx += uint64_t(s) * strides_[i];
  }
  return Elem(idx);
}

Elem FiniteRing::neg(Elem a) const {
  CoeffBuf ca;
  decode(a, ca);
  uint64_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) idx += uint64_t(ca[i] == 0 ? 0 : orders_[i] - ca[i]) * strides_[i];
  return Elem(idx);
}

Elem FiniteRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteRing::scale(Elem a, int64_t n) const {
  CoeffBuf ca;
  decode(a, ca);
  uint64_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) {
    __int128 v = __int128(ca[i]) * n % orders_[i];
    if (v < 0) v += orders_[i];
    idx += uint64_t(v) * strides_[i];
  }
  return Elem(idx);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
  const size_t k = rank();
  CoeffBuf ca, cb;
  decode(a, ca);
  decode(b, cb);
  std::array<__int128, kMaxRank> acc{};
  for (size_t i = 0; i < k; ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < k; ++j) {
      if (cb[j] == 0) continue;
      const __int128 ab = __int128(ca[i]) * cb[j];
      const IntVec& c = table_[i][j];
      for (size_t l = 0; l < k; ++l) {
        if (c[l] != 0) acc[l] = (acc[l] + ab * c[l]) % orders_[l];
      }
    }
  }
  uint64_t idx = 0;
  for (size_t l = 0; l < k; ++l) idx += uint64_t(acc[l]) * strides_[l];
  return Elem(idx);
}

Elem FiniteRing::pow(Elem a, uint64_t n) const {
  Elem result = one_, base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

IntVec FiniteRing::mul_vectors(const IntVec& a, const IntVec& b) const {
  return element(mul(index(std::span<const int64_t>(a)), index(std::span<const int64_t>(b)))).coeffs;
}

RingElement elem_add(const FiniteRing& r, const RingElement& a, const RingElement& b) {
  return r.element(r.add(r.index(a), r.index(b)));
}

RingElement elem_mul(const FiniteRing& r, const RingElement& a, const RingElement& b) {
  return r.element(r.mul(r.index(a), r.index(b)));
}

RingElement elem_pow(const FiniteRing& r, const RingElement& a, uint64_t n) {
  return r.element(r.pow(r.index(a), n));
}

// ---------------------------------------------------------------- FinIdeal

bool FinIdeal::subset_of(const FinIdeal& o) const {
  for (size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

std::strong_ordering FinIdeal::operator<=>(const FinIdeal& o) const {
  if (auto c = elements_.size() <=> o.elements_.size(); c != 0) return c;
  return elements_ <=> o.elements_;
}

size_t FinIdealHash::operator()(const FinIdeal& i) const noexcept {
  size_t h = 1469598103934665603ULL;
  for (uint64_t w : i.bits()) h = (h ^ w) * 1099511628211ULL;
  return h;
}

/// Fixpoint closure under addition and multiplication by basis elements.
class IdealClosure {
 public:
  explicit IdealClosure(const FiniteRing& r) : r_(r) {
    ideal_.bits_.assign(size_t(r.order() / 64 + 1), 0);
    mark(r.zero());
  }

  IdealClosure(const FiniteRing& r, const FinIdeal& start) : r_(r), ideal_(start) {}

  void add_generators(std::span<const Elem> gens) {
    for (Elem g : gens) {
      if (extend(g)) {
        ideal_.gens_.push_back(g);
        close_from(g);
      }
    }
  }

  FinIdeal finish() && {
    std::sort(ideal_.elements_.begin(), ideal_.elements_.end());
    return std::move(ideal_);
  }

 private:
  bool has(Elem x) const { return ideal_.contains(x); }
  void mark(Elem x) {
    ideal_.bits_[x >> 6] |= uint64_t(1) << (x & 63);
    ideal_.elements_.push_back(x);
  }

  // Adjoins the cyclic subgroup <g> to the current additive subgroup.
  bool extend(Elem g) {
    if (has(g)) return false;
    const size_t s = ideal_.elements_.size();
    for (Elem m = g; !has(m); m = r_.add(m, g)) {
      for (size_t t = 0; t < s; ++t) mark(r_.add(ideal_.elements_[t], m));
    }
    ideal_.span_.push_back(g);
    return true;
  }

  void close_from(Elem g) {
    std::vector<Elem> work;
    for (size_t i = 0; i < r_.rank(); ++i) work.push_back(r_.mul(g, r_.basis(i)));
    while (!work.empty()) {
      Elem h = work.back();
      work.pop_back();
      if (!extend(h)) continue;
      for (size_t i = 0; i < r_.rank(); ++i) work.push_back(r_.mul(h, r_.basis(i)));
    }
  }

  const FiniteRing& r_;
  FinIdeal ideal_;
};

FinIdeal ideal_generate(const FiniteRing& r, std::span<const Elem> gens) {
  IdealClosure c(r);
  c.add_generators(gens);
  return std::move(c).finish();
}

FinIdeal ideal_generate(const FiniteRing& r, const std::vector<RingElement>& gens) {
  std::vector<Elem> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) idx.push_back(r.index(g));
  return ideal_generate(r, idx);
}

FinIdeal ideal_from_elements(const FiniteRing& r, std::span<const Elem> elements) {
  FinIdeal i = ideal_generate(r, elements);
  std::vector<Elem> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != r.zero()) sorted.insert(sorted.begin(), r.zero());
  if (sorted != i.elements()) throw std::logic_error("element set is not an ideal");
  return i;
}

FinIdeal ideal_unit(const FiniteRing& r) {
  const Elem one = r.one();
  return ideal_generate(r, std::span<const Elem>(&one, 1));
}

FinIdeal ideal_zero(const FiniteRing& r) { return ideal_generate(r, std::span<const Elem>{}); }

FinIdeal ideal_sum(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j) {
  IdealClosure c(r, i);
  c.add_generators(j.gens());
  return std::move(c).finish();
}

FinIdeal ideal_product(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j) {
  std::vector<Elem> gens;
  for (Elem a : i.gens())
    for (Elem b : j.gens()) gens.push_back(r.mul(a, b));
  return ideal_generate(r, gens);
}

FinIdeal ideal_intersection(const FiniteRing& r, const FinIdeal& i, const FinIdeal& j) {
  std::vector<Elem> common;
  for (Elem x : i.elements())
    if (j.contains(x)) common.push_back(x);
  return ideal_from_elements(r, common);
}

FinIdeal ideal_radical(const FiniteRing& r, const FinIdeal& i) {
  std::vector<uint32_t> stamp(size_t(r.order()), 0);
  std::vector<Elem> rad;
  for (Elem x = 0; x < r.order(); ++x) {
    const uint32_t cur = x + 1;
    Elem p = x;
    for (;;) {
      if (i.contains(p)) {
        rad.push_back(x);
        break;
      }
      if (stamp[p] == cur) break;  // powers entered a cycle outside I
      stamp[p] = cur;
      p = r.mul(p, x);
    }
  }
  return ideal_from_elements(r, rad);
}

bool is_proper(const FiniteRing& r, const FinIdeal& i) { return !i.contains(r.one()); }

bool is_prime(const FiniteRing& r, const FinIdeal& i) {
  if (!is_proper(r, i)) return false;
  for (Elem a = 0; a < r.order(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = a; b < r.order(); ++b) {
      if (!i.contains(b) && i.contains(r.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal(const FiniteRing& r, const FinIdeal& i) {
  if (!is_proper(r, i)) return false;
  for (Elem x = 0; x < r.order(); ++x) {
    if (i.contains(x)) continue;
    IdealClosure c(r, i);
    c.add_generators(std::span<const Elem>(&x, 1));
    if (!is_proper(r, std::move(c).finish())) continue;
    return false;
  }
  return true;
}

bool is_primary(const FiniteRing& r, const FinIdeal& i) {
  if (!is_proper(r, i)) return false;
  const FinIdeal rad = ideal_radical(r, i);
  for (Elem a = 0; a < r.order(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = 0; b < r.order(); ++b) {
      if (i.contains(r.mul(a, b)) && !rad.contains(b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- enumeration

void require_within_guard(const FiniteRing& r, const Limits& limits) {
  if (r.order() > limits.enumeration_guard) {
    throw LimitExceeded("ring too large for exhaustive enumeration (order " + std::to_string(r.order()) +
                        " > guard " + std::to_string(limits.enumeration_guard) + ")");
  }
}

namespace {

std::vector<FinIdeal> distinct_sorted(std::vector<FinIdeal> all) {
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

std::vector<FinIdeal> principal_ideals_serial(const FiniteRing& r) {
  std::vector<FinIdeal> all(size_t(r.order()));
  for (Elem x = 0; x < r.order(); ++x) all[x] = ideal_generate(r, std::span<const Elem>(&x, 1));
  return distinct_sorted(std::move(all));
}

std::vector<FinIdeal> principal_ideals(const FiniteRing& r) {
  const auto n = static_cast<int64_t>(r.order());
  std::vector<FinIdeal> all(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t x = 0; x < n; ++x) {
    const Elem e = Elem(x);
    all[size_t(x)] = ideal_generate(r, std::span<const Elem>(&e, 1));
  }
  return distinct_sorted(std::move(all));
}

std::vector<FinIdeal> ideals_containing(const FiniteRing& r, const FinIdeal& base, const Limits& limits) {
  require_within_guard(r, limits);
  std::vector<FinIdeal> principals;
  for (auto& p : principal_ideals(r))
    if (!p.subset_of(base)) principals.push_back(std::move(p));

  std::vector<FinIdeal> found{base};
  struct BitsHash {
    size_t operator()(const std::vector<uint64_t>& b) const noexcept {
      size_t h = 1469598103934665603ULL;
      for (uint64_t w : b) h = (h ^ w) * 1099511628211ULL;
      return h;
    }
  };
  std::unordered_map<std::vector<uint64_t>, size_t, BitsHash> seen{{base.bits(), 0}};
  for (size_t head = 0; head < found.size(); ++head) {
    for (const auto& p : principals) {
      if (p.subset_of(found[head])) continue;
      FinIdeal next = ideal_sum(r, found[head], p);
      if (seen.emplace(next.bits(), found.size()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<FinIdeal> enumerate_ideals(const FiniteRing& r, const Limits& limits) {
  return ideals_containing(r, ideal_zero(r), limits);
}

std::vector<FinIdeal> min_primes(const FiniteRing& r, const FinIdeal& i, const Limits& limits) {
  if (!is_proper(r, i)) throw InputError("no primes over the unit ideal");
  std::vector<FinIdeal> primes;
  for (auto& j : ideals_containing(r, i, limits))
    if (is_prime(r, j)) primes.push_back(std::move(j));
  std::vector<FinIdeal> minimal;
  for (const auto& p : primes) {
    bool is_min = std::none_of(primes.begin(), primes.end(),
                               [&](const FinIdeal& q) { return q != p && q.subset_of(p); });
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

// ---------------------------------------------------------------- constructions

LatticeRing ring_from_lattice(size_t rank, const VectorProduct& mul, const IntVec& unity,
                              const std::vector<IntVec>& relations) {
  CyclicDecomposition dec = decompose_quotient(rank, relations);
  const size_t k = dec.moduli.size();
  if (k == 0) return {FiniteRing::zero_ring(), std::move(dec)};
  std::vector<std::vector<IntVec>> table(k, std::vector<IntVec>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      table[i][j] = dec.project(mul(dec.basis[i], dec.basis[j]));
      table[j][i] = table[i][j];
    }
  IntVec one = dec.project(unity);
  FiniteRing ring(dec.moduli, std::move(table), std::move(one));
  return {std::move(ring), std::move(dec)};
}

Elem QuotientRing::image(const FiniteRing& source, Elem x) const {
  return lattice.image(source.element(x).coeffs);
}

QuotientRing quotient_ring(const FiniteRing& r, const FinIdeal& i) {
  const size_t k = r.rank();
  std::vector<IntVec> relations;
  for (size_t l = 0; l < k; ++l) {
    IntVec v(k, 0);
    v[l] = r.orders()[l];
    relations.push_back(std::move(v));
  }
  for (Elem g : i.span()) relations.push_back(r.element(g).coeffs);
  auto mul = [&r](const IntVec& a, const IntVec& b) { return r.mul_vectors(a, b); };
  return {ring_from_lattice(k, mul, r.unity_coeffs(), relations)};
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
  const size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  if (k == 0) return FiniteRing::zero_ring();
  std::vector<int64_t> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<std::vector<IntVec>> table(k, std::vector<IntVec>(k, IntVec(k, 0)));
  for (size_t i = 0; i < ka; ++i)
    for (size_t j = 0; j < ka; ++j)
      std::copy(a.structure(i, j).begin(), a.structure(i, j).end(), table[i][j].begin());
  for (size_t i = 0; i < kb; ++i)
    for (size_t j = 0; j < kb; ++j)
      std::copy(b.structure(i, j).begin(), b.structure(i, j).end(), table[ka + i][ka + j].begin() + ptrdiff_t(ka));
  IntVec unity = a.unity_coeffs();
  unity.insert(unity.end(), b.unity_coeffs().begin(), b.unity_coeffs().end());
  return FiniteRing(std::move(orders), std::move(table), std::move(unity));
}

std::vector<Elem> idempotents(const FiniteRing& r, const Limits& limits) {
  require_within_guard(r, limits);
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Elem> primitive_idempotents(const FiniteRing& r, const Limits& limits) {
  const auto all = idempotents(r, limits);
  std::vector<Elem> out;
  for (Elem e : all) {
    if (e == r.zero()) continue;
    bool primitive = std::none_of(all.begin(), all.end(),
                                  [&](Elem f) { return f != r.zero() && f != e && r.mul(e, f) == f; });
    if (primitive) out.push_back(e);
  }
  return out;
}

std::vector<QuotientRing> decompose(const FiniteRing& r, const Limits& limits) {
  std::vector<QuotientRing> out;
  for (Elem e : primitive_idempotents(r, limits)) {
    // eR is isomorphic to R/(1-e)R, with e mapping to the unity.
    const Elem complement = r.sub(r.one(), e);
    out.push_back(quotient_ring(r, ideal_generate(r, std::span<const Elem>(&complement, 1))));
  }
  return out;
}

bool is_isomorphic_to_zn(const FiniteRing& r, int64_t n) {
  if (n < 1 || r.order() != uint64_t(n)) return false;
  int64_t t = 1;
  for (Elem m = r.one(); m != r.zero(); m = r.add(m, r.one())) ++t;
  return t == n;
}

bool is_field(const FiniteRing& r) {
  if (r.order() < 2) return false;
  for (Elem a = 1; a < r.order(); ++a) {
    bool invertible = false;
    for (Elem b = 1; b < r.order() && !invertible; ++b) invertible = r.mul(a, b) == r.one();
    if (!invertible) return false;
  }
  return true;
}

std::string format_coeffs(const FiniteRing& r, Elem x) {
  std::ostringstream os;
  os << '[';
  const auto e = r.element(x);
  for (size_t i = 0; i < e.coeffs.size(); ++i) os << (i ? "," : "") << e.coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace taf
