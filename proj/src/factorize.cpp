#include "taf/factorize.hpp"

#include <algorithm>
#include <numeric>

#include "taf/checked.hpp"

namespace taf {

const char* to_string(NonTAFKind k) {
  return k == NonTAFKind::ExhaustedSearch ? "exhausted-search" : "incomparable-with-square";
}

// ---------------------------------------------------------------- generic search

DivisorLatticeSearch::DivisorLatticeSearch(std::vector<size_t> order, size_t unit_id, Callbacks callbacks)
    : order_(std::move(order)), unit_id_(unit_id), cb_(std::move(callbacks)) {
  first_.assign(order_.size(), {});
  shortest_.assign(order_.size(), {});
}

void DivisorLatticeSearch::prepare() {
  if (prepared_) return;
  for (size_t id : order_)
    if (id != unit_id_ && cb_.is_ta(id)) proper_ta_.push_back(id);
  prepared_ = true;
}

bool DivisorLatticeSearch::solve_first(size_t k) {
  switch (first_[k].state) {
    case State::Solved:
      return true;
    case State::Failed:
    case State::InProgress:  // J*K = K style cycles cannot close a finite product
      return false;
    case State::Unknown:
      break;
  }
  first_[k].state = State::InProgress;
  // Splits are tried before accepting K whole, so the first factorization is
  // refined into the largest factors available.
  for (size_t j : proper_ta_) {
    if (!cb_.subset(k, j)) continue;
    for (size_t c : order_) {
      if (c == unit_id_ || c == k || !cb_.subset(k, c)) continue;
      if (cb_.product(j, c) != int(k)) continue;
      if (solve_first(c)) {
        first_[k] = {State::Solved, int(j), int(c), 0};
        return true;
      }
    }
  }
  if (cb_.is_ta(k)) {
    first_[k] = {State::Solved, int(k), -1, 1};
    return true;
  }
  first_[k].state = State::Failed;
  return false;
}

bool DivisorLatticeSearch::solve_shortest(size_t k) {
  switch (shortest_[k].state) {
    case State::Solved:
      return true;
    case State::Failed:
    case State::InProgress:
      return false;
    case State::Unknown:
      break;
  }
  shortest_[k].state = State::InProgress;
  if (cb_.is_ta(k)) {
    shortest_[k] = {State::Solved, int(k), -1, 1};
    return true;
  }
  Step best{State::Failed, -1, -1, 0};
  for (size_t j : proper_ta_) {
    if (!cb_.subset(k, j)) continue;
    for (size_t c : order_) {
      if (c == unit_id_ || c == k || !cb_.subset(k, c)) continue;
      if (cb_.product(j, c) != int(k) || !solve_shortest(c)) continue;
      const int len = shortest_[c].length + 1;
      if (best.state == State::Failed || len < best.length) best = {State::Solved, int(j), int(c), len};
    }
  }
  shortest_[k] = best;
  return best.state == State::Solved;
}

std::vector<size_t> DivisorLatticeSearch::unwind(size_t k, const std::vector<Step>& steps) const {
  std::vector<size_t> ids;
  for (;;) {
    const Step& s = steps[k];
    ids.push_back(size_t(s.factor));
    if (s.cofactor < 0) break;
    k = size_t(s.cofactor);
  }
  return ids;
}

std::optional<std::vector<size_t>> DivisorLatticeSearch::first(size_t k) {
  if (k == unit_id_) throw InputError("the unit ideal has no TA-factorization (factors must be proper)");
  prepare();
  if (!solve_first(k)) return std::nullopt;
  return unwind(k, first_);
}

std::optional<std::vector<size_t>> DivisorLatticeSearch::shortest(size_t k) {
  if (k == unit_id_) throw InputError("the unit ideal has no TA-factorization (factors must be proper)");
  prepare();
  if (!solve_shortest(k)) return std::nullopt;
  return unwind(k, shortest_);
}

// ---------------------------------------------------------------- finite rings

namespace {

std::vector<size_t> largest_first(const std::vector<FinIdeal>& lattice) {
  std::vector<size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), size_t(0));
  // lattice is canonically sorted, so stability keeps canonical order within a size
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return lattice[a].size() > lattice[b].size(); });
  return order;
}

}  // namespace

FactorizationSearch::FactorizationSearch(const FiniteRing& r, const FinIdeal& base, const Limits& limits)
    : ring_(r),
      limits_(limits),
      lattice_(ideals_containing(r, base, limits)),
      unit_id_(lattice_.size() - 1),  // canonical order puts R last
      search_(largest_first(lattice_), lattice_.size() - 1,
              {[this](size_t id) { return is_ta(id); },
               [this](size_t a, size_t b) { return lattice_[a].subset_of(lattice_[b]); },
               [this](size_t j, size_t c) { return product_id(j, c); }}) {
  for (size_t id = 0; id < lattice_.size(); ++id) ids_.emplace(lattice_[id], id);
  ta_.assign(lattice_.size(), -1);
}

size_t FactorizationSearch::checked_id(const FinIdeal& i) const {
  auto it = ids_.find(i);
  if (it == ids_.end()) throw InputError("target ideal does not contain the search base");
  return it->second;
}

bool FactorizationSearch::is_ta(size_t id) {
  if (id == unit_id_) return false;
  if (ta_[id] < 0) ta_[id] = ta_check(ring_, lattice_[id], limits_).is_ta ? 1 : 0;
  return ta_[id] == 1;
}

int FactorizationSearch::product_id(size_t j, size_t c) {
  const uint64_t key = uint64_t(std::min(j, c)) * lattice_.size() + std::max(j, c);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  auto it = ids_.find(ideal_product(ring_, lattice_[j], lattice_[c]));
  const int id = it == ids_.end() ? -1 : int(it->second);
  products_.emplace(key, id);
  return id;
}

TAFactorization FactorizationSearch::collect(const std::vector<size_t>& ids) const {
  TAFactorization f;
  for (size_t id : ids) f.factors.push_back(lattice_[id]);
  return f;
}

std::optional<TAFactorization> FactorizationSearch::first(const FinIdeal& target) {
  auto ids = search_.first(checked_id(target));
  if (!ids) return std::nullopt;
  return collect(*ids);
}

std::optional<TAFactorization> FactorizationSearch::shortest(const FinIdeal& target) {
  auto ids = search_.shortest(checked_id(target));
  if (!ids) return std::nullopt;
  return collect(*ids);
}

std::vector<FinIdeal> divisors_above(const FiniteRing& r, const FinIdeal& i, const Limits& limits) {
  return ideals_containing(r, i, limits);
}

std::optional<TAFactorization> ta_factorization(const FiniteRing& r, const FinIdeal& i, const Limits& limits,
                                                bool shortest) {
  if (!is_proper(r, i)) throw InputError("the unit ideal has no TA-factorization (factors must be proper)");
  FactorizationSearch search(r, i, limits);
  return shortest ? search.shortest(i) : search.first(i);
}

bool verify_factorization(const FiniteRing& r, const FinIdeal& target, const TAFactorization& f,
                          const Limits& limits) {
  if (f.factors.empty()) return false;
  FinIdeal acc = ideal_unit(r);
  for (const auto& j : f.factors) {
    if (!is_proper(r, j) || !ta_check(r, j, limits).is_ta) return false;
    acc = ideal_product(r, acc, j);
  }
  return acc == target;
}

std::optional<NonTAFCertificate> square_comparability_witness(const FiniteRing& r, const Limits& limits) {
  const auto ideals = enumerate_ideals(r, limits);
  std::vector<FinIdeal> maximal;
  for (const auto& m : ideals)
    if (is_maximal(r, m)) maximal.push_back(m);
  std::vector<FinIdeal> squares;
  for (const auto& m : maximal) squares.push_back(ideal_product(r, m, m));

  for (const auto& i : ideals) {
    if (!is_proper(r, i)) continue;
    const FinIdeal rad = ideal_radical(r, i);
    auto it = std::find(maximal.begin(), maximal.end(), rad);
    if (it == maximal.end()) continue;
    const FinIdeal& sq = squares[size_t(it - maximal.begin())];
    if (i.subset_of(sq) || sq.subset_of(i)) continue;
    NonTAFCertificate c;
    c.kind = NonTAFKind::IncomparableWithSquare;
    c.ideal = i;
    c.maximal = *it;
    c.maximal_square = sq;
    c.in_ideal_not_square = *std::find_if(i.elements().begin(), i.elements().end(),
                                          [&](Elem x) { return !sq.contains(x); });
    c.in_square_not_ideal = *std::find_if(sq.elements().begin(), sq.elements().end(),
                                          [&](Elem x) { return !i.contains(x); });
    return c;
  }
  return std::nullopt;
}

TAFAudit is_taf(const FiniteRing& r, const Limits& limits) {
  require_within_guard(r, limits);
  FactorizationSearch search(r, ideal_zero(r), limits);
  TAFAudit audit;
  audit.is_taf = true;
  std::optional<FinIdeal> first_failure;
  for (const auto& i : search.lattice()) {
    if (!is_proper(r, i)) continue;
    if (auto f = search.first(i)) {
      audit.table.emplace_back(i, std::move(*f));
    } else if (!first_failure) {
      first_failure = i;
      audit.is_taf = false;
    }
  }
  if (!audit.is_taf) {
    audit.certificate = square_comparability_witness(r, limits);
    if (!audit.certificate) {
      NonTAFCertificate c;
      c.kind = NonTAFKind::ExhaustedSearch;
      c.ideal = *first_failure;
      audit.certificate = std::move(c);
    }
  }
  return audit;
}

bool verify_certificate(const FiniteRing& r, const NonTAFCertificate& c, const Limits& limits) {
  if (!is_proper(r, c.ideal)) return false;
  if (c.kind == NonTAFKind::ExhaustedSearch) return !ta_factorization(r, c.ideal, limits).has_value();
  if (!c.maximal || !c.maximal_square || !c.in_ideal_not_square || !c.in_square_not_ideal) return false;
  const FinIdeal& m = *c.maximal;
  const FinIdeal& sq = *c.maximal_square;
  return is_maximal(r, m) && ideal_radical(r, c.ideal) == m && ideal_product(r, m, m) == sq &&
         c.ideal.contains(*c.in_ideal_not_square) && !sq.contains(*c.in_ideal_not_square) &&
         sq.contains(*c.in_square_not_ideal) && !c.ideal.contains(*c.in_square_not_ideal);
}

}  // namespace taf
