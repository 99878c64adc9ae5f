#include "taf/quadratic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include "taf/checked.hpp"
#include "taf/presentation.hpp"
#include "taf/ring_spec.hpp"

namespace taf {

QuadOrder::QuadOrder(int64_t d, QuadBasis basis) : d_(d), basis_(basis) {
  if (d == 0 || d == 1) throw InputError("d must differ from 0 and 1");
  if (!is_squarefree(d)) throw InputError("d = " + std::to_string(d) + " is not square-free");
  if (basis == QuadBasis::Half) {
    if (mod_floor(d, 4) != 1) throw InputError("the half basis needs d = 1 mod 4");
    beta_sq_ = {(d - 1) / 4, 1};
  } else {
    beta_sq_ = {d, 0};
  }
}

QuadElement quad_add(const QuadElement& u, const QuadElement& v) {
  return {checked_add(u.x, v.x), checked_add(u.y, v.y)};
}

QuadElement quad_mul(const QuadOrder& D, const QuadElement& u, const QuadElement& v) {
  const auto& [p, q] = D.beta_square();
  const int64_t yy = checked_mul(u.y, v.y);
  return {checked_fma(yy, p, checked_mul(u.x, v.x)),
          checked_fma(yy, q, checked_add(checked_mul(u.x, v.y), checked_mul(u.y, v.x)))};
}

namespace {

QuadIdeal from_hnf(const std::vector<IntVec>& vectors) {
  const Hnf2 h = hnf2(vectors);
  return {h.a, h.b, h.c};
}

std::array<QuadElement, 2> basis_of(const QuadIdeal& i) { return {QuadElement{i.a, 0}, QuadElement{i.b, i.c}}; }

IntVec ambient(const QuadElement& e) { return {e.x, e.y}; }

}  // namespace

QuadIdeal quad_unit_ideal() { return {1, 0, 1}; }

QuadIdeal ideal_from_gens(const QuadOrder& D, const std::vector<QuadElement>& gens) {
  std::vector<IntVec> vectors;
  const QuadElement beta{0, 1};
  for (const auto& g : gens) {
    if (g == QuadElement{}) continue;
    vectors.push_back(ambient(g));
    vectors.push_back(ambient(quad_mul(D, g, beta)));
  }
  if (vectors.empty()) throw InputError("zero ideal not representable");
  return from_hnf(vectors);
}

QuadIdeal ideal_mul(const QuadOrder& D, const QuadIdeal& i, const QuadIdeal& j) {
  std::vector<IntVec> vectors;
  for (const auto& u : basis_of(i))
    for (const auto& v : basis_of(j)) vectors.push_back(ambient(quad_mul(D, u, v)));
  return from_hnf(vectors);
}

int64_t ideal_norm(const QuadIdeal& i) { return checked_mul(i.a, i.c); }

bool contains(const QuadIdeal& i, const QuadElement& x) {
  if (mod_floor(x.y, i.c) != 0) return false;
  const int64_t t = x.y / i.c;
  return mod_floor(checked_sub(x.x, checked_mul(t, i.b)), i.a) == 0;
}

bool subset(const QuadIdeal& i, const QuadIdeal& j) {
  for (const auto& u : basis_of(i))
    if (!contains(j, u)) return false;
  return true;
}

bool is_proper(const QuadIdeal& i) { return ideal_norm(i) != 1; }

QuadElement reduce(const QuadIdeal& i, const QuadElement& e) {
  const int64_t t = div_floor(e.y, i.c);
  return {mod_floor(checked_sub(e.x, checked_mul(t, i.b)), i.a), checked_sub(e.y, checked_mul(t, i.c))};
}

QuadElement QuadQuotient::lift(Elem x) const {
  const auto coeffs = ring().element(x).coeffs;
  QuadElement e;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    e.x = checked_fma(coeffs[j], lattice.map.basis[j][0], e.x);
    e.y = checked_fma(coeffs[j], lattice.map.basis[j][1], e.y);
  }
  return reduce(ideal, e);
}

QuadIdeal QuadQuotient::preimage(const FinIdeal& j) const {
  std::vector<IntVec> vectors{{ideal.a, 0}, {ideal.b, ideal.c}};
  for (Elem g : j.span()) vectors.push_back(ambient(lift(g)));
  return from_hnf(vectors);
}

QuadQuotient quotient_finite(const QuadOrder& D, const QuadIdeal& i, const Limits& limits) {
  const int64_t n = ideal_norm(i);
  if (uint64_t(n) > limits.enumeration_guard) {
    throw LimitExceeded("quotient too large for exhaustive enumeration (norm " + std::to_string(n) + " > guard " +
                        std::to_string(limits.enumeration_guard) + ")");
  }
  auto mul = [&D](const IntVec& u, const IntVec& v) {
    return ambient(quad_mul(D, {u[0], u[1]}, {v[0], v[1]}));
  };
  return {i, ring_from_lattice(2, mul, {1, 0}, {{i.a, 0}, {i.b, i.c}})};
}

QuadTAResult ta_check_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits) {
  if (!is_proper(i)) throw InputError("TA is defined for proper ideals");
  const QuadQuotient q = quotient_finite(D, i, limits);
  const TAResult r = ta_check(q.ring(), ideal_zero(q.ring()), limits);
  if (r.is_ta) return {true, std::nullopt};
  return {false, QuadTAWitness{q.lift(r.witness->a), q.lift(r.witness->b), q.lift(r.witness->c)}};
}

bool verify_quad_witness(const QuadOrder& D, const QuadIdeal& i, const QuadTAWitness& w) {
  const QuadElement ab = quad_mul(D, w.a, w.b);
  return contains(i, quad_mul(D, ab, w.c)) && !contains(i, ab) && !contains(i, quad_mul(D, w.a, w.c)) &&
         !contains(i, quad_mul(D, w.b, w.c));
}

std::vector<QuadIdeal> ideals_above_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits) {
  const QuadQuotient q = quotient_finite(D, i, limits);
  std::vector<QuadIdeal> out;
  for (const auto& j : enumerate_ideals(q.ring(), limits)) out.push_back(q.preimage(j));
  return out;
}

std::optional<QuadFactorization> ta_factorization_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits,
                                                       bool shortest) {
  if (!is_proper(i)) throw InputError("the unit ideal has no TA-factorization (factors must be proper)");
  const QuadQuotient q = quotient_finite(D, i, limits);
  const std::vector<FinIdeal> images = enumerate_ideals(q.ring(), limits);
  std::vector<QuadIdeal> lattice;
  std::map<QuadIdeal, size_t> ids;
  for (const auto& j : images) {
    ids.emplace(q.preimage(j), lattice.size());
    lattice.push_back(q.preimage(j));
  }
  const size_t unit = lattice.size() - 1;
  const size_t target = ids.at(i);

  std::vector<size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return images[a].size() > images[b].size(); });

  std::vector<int8_t> ta(lattice.size(), -1);
  DivisorLatticeSearch search(
      std::move(order), unit,
      {[&](size_t id) {
         if (id == unit) return false;
         if (ta[id] < 0) ta[id] = ta_check(q.ring(), images[id], limits).is_ta ? 1 : 0;
         return ta[id] == 1;
       },
       [&](size_t a, size_t b) { return subset(lattice[a], lattice[b]); },
       [&](size_t a, size_t b) {
         // the product is formed in D, so equality is exact rather than modulo I
         auto it = ids.find(ideal_mul(D, lattice[a], lattice[b]));
         return it == ids.end() ? -1 : int(it->second);
       }});
  auto found = shortest ? search.shortest(target) : search.first(target);
  if (!found) return std::nullopt;
  QuadFactorization f;
  for (size_t id : *found) f.factors.push_back(lattice[id]);
  return f;
}

bool verify_quad_factorization(const QuadOrder& D, const QuadIdeal& i, const QuadFactorization& f,
                               const Limits& limits) {
  if (f.factors.empty()) return false;
  QuadIdeal acc = quad_unit_ideal();
  for (const auto& j : f.factors) {
    if (!is_proper(j) || !ta_check_quad(D, j, limits).is_ta) return false;
    acc = ideal_mul(D, acc, j);
  }
  return acc == i;
}

std::vector<QuadIdeal> min_primes_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits) {
  const QuadQuotient q = quotient_finite(D, i, limits);
  std::vector<QuadIdeal> out;
  for (const auto& p : min_primes(q.ring(), ideal_zero(q.ring()), limits)) out.push_back(q.preimage(p));
  return out;
}

// ---------------------------------------------------------------- classification

const char* to_string(QuadVerdict v) { return v == QuadVerdict::TAF ? "TAF" : "not-TAF"; }

namespace {

const PresentedRing& presented_target() {
  static const PresentedRing t(parse_ringspec("Z/8[x]/(x^2, 2x)"));
  return t;
}

}  // namespace

const FiniteRing& non_taf_target() { return presented_target().ring(); }

namespace {

struct TargetAudit {
  NonTAFCertificate certificate;
  bool verified = false;
};

const TargetAudit& target_audit() {
  static const TargetAudit audit = [] {
    const FiniteRing& t = non_taf_target();
    TAFAudit a = is_taf(t);
    if (a.is_taf || !a.certificate) throw std::logic_error("T = Z/8[x]/(x^2, 2x) audited as TAF");
    return TargetAudit{*a.certificate, verify_certificate(t, *a.certificate)};
  }();
  return audit;
}

bool field_by_polynomial(int64_t k) {
  // X^2 - X + k over Z/2, written with nonnegative coefficients
  const std::string spec = "Z/2[x]/(x^2 + x + " + std::to_string(mod_floor(k, 2)) + ")";
  return is_field(construct(parse_ringspec(spec)));
}

bool field_by_quotient(int64_t d) {
  const QuadOrder maximal(d, QuadBasis::Half);
  // 1 + sqrt d = 2*omega
  const QuadIdeal m = ideal_from_gens(maximal, {{2, 0}, {0, 2}});
  return is_field(quotient_finite(maximal, m).ring());
}

struct Homomorphism {
  bool well_defined = false;
  bool surjective = false;
};

Homomorphism sqrt_to_one_plus_x(int64_t d) {
  const FiniteRing& t = non_taf_target();
  const Elem one = t.one();
  const Elem s = presented_target().parse_element("1 + x");
  Homomorphism h;
  h.well_defined = t.mul(s, s) == t.scale(one, d);
  std::vector<bool> hit(t.order(), false);
  for (int64_t a = 0; a < t.exponent(); ++a)
    for (int64_t b = 0; b < t.exponent(); ++b) hit[t.add(t.scale(one, a), t.scale(s, b))] = true;
  h.surjective = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
  return h;
}

}  // namespace

QuadClassification classify_quadratic_order(int64_t d) {
  if (d == 0 || d == 1) throw InputError("d must differ from 0 and 1");
  if (!is_squarefree(d)) throw InputError("d = " + std::to_string(d) + " is not square-free");
  if (mod_floor(d, 4) != 1) throw InputError("d = " + std::to_string(d) + " is outside the d = 1 mod 4 scope");
  QuadClassification c;
  c.d = d;
  c.residue_constant = (1 - d) / 4;
  if (mod_floor(c.residue_constant, 2) == 1) {
    c.field_by_polynomial = field_by_polynomial(c.residue_constant);
    c.field_by_quotient = field_by_quotient(d);
    if (!c.field_by_polynomial || !c.field_by_quotient)
      throw std::logic_error("odd (1-d)/4 but the residue ring at 2 is not a field");
    c.verdict = QuadVerdict::TAF;
    return c;
  }
  const Homomorphism h = sqrt_to_one_plus_x(d);
  c.homomorphism_well_defined = h.well_defined;
  c.homomorphism_surjective = h.surjective;
  const TargetAudit& audit = target_audit();
  if (!h.well_defined || !h.surjective || !audit.verified)
    throw std::logic_error("even (1-d)/4 but the map onto Z/8[x]/(x^2, 2x) does not certify");
  c.target_certificate = audit.certificate;
  c.verdict = QuadVerdict::NotTAF;
  return c;
}

bool verify_classification(const QuadClassification& c) {
  if (c.verdict == QuadVerdict::TAF) {
    return c.residue_constant == (1 - c.d) / 4 && mod_floor(c.residue_constant, 2) == 1 &&
           field_by_polynomial(c.residue_constant) && field_by_quotient(c.d);
  }
  if (!c.target_certificate) return false;
  const Homomorphism h = sqrt_to_one_plus_x(c.d);
  const TAFAudit fresh = is_taf(non_taf_target());
  return h.well_defined && h.surjective && !fresh.is_taf &&
         verify_certificate(non_taf_target(), *c.target_certificate);
}

// ---------------------------------------------------------------- text

QuadElement parse_quad_element(std::string_view text) {
  const std::string normalized = std::regex_replace(std::string(text), std::regex("sqrt"), "w");
  const Poly p = parse_poly(normalized, "w");
  if (p.degree() > 1) throw InputError("quadratic element must be linear in w: '" + std::string(text) + "'");
  QuadElement e;
  if (!p.coeffs.empty()) e.x = p.coeffs[0];
  if (p.coeffs.size() > 1) e.y = p.coeffs[1];
  return e;
}

std::vector<QuadElement> parse_quad_elements(std::string_view text) {
  std::vector<QuadElement> out;
  size_t start = 0;
  for (;;) {
    const size_t comma = text.find(',', start);
    out.push_back(parse_quad_element(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format(const QuadElement& e) {
  Poly p{{e.x, e.y}};
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return to_string(p, "w");
}

std::string format(const QuadIdeal& i) {
  if (i.b == 0 && i.c == i.a) return "(" + std::to_string(i.a) + ")";
  return "(" + std::to_string(i.a) + ", " + format(QuadElement{i.b, i.c}) + ")";
}

}  // namespace taf
