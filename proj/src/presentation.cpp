#include "taf/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "taf/checked.hpp"

namespace taf {

namespace {

int64_t inverse_mod(int64_t a, int64_t n) {
  auto [g, s, t] = ext_gcd(mod_floor(a, n), n);
  (void)t;
  if (g != 1) throw InputError("leading coefficient is not a unit");
  return mod_floor(s, n);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

FiniteRing product_of(const std::vector<FiniteRing>& parts) {
  FiniteRing acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, parts[i]);
  return acc;
}

// Multiplies base vectors of length e as polynomials mod (n, monic).
IntVec poly_mul_mod(const IntVec& u, const IntVec& v, const IntVec& monic, int64_t n) {
  const size_t e = monic.size() - 1;
  IntVec prod(std::max(2 * e + 1, u.size() + v.size()), 0);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      prod[i + j] = mod_floor(prod[i + j] + mod_floor(mod_floor(u[i], n) * mod_floor(v[j], n), n), n);
  }
  for (size_t m = prod.size(); m-- > e;) {
    const int64_t t = prod[m];
    if (t == 0) continue;
    for (size_t i = 0; i <= e; ++i) prod[m - e + i] = mod_floor(prod[m - e + i] - t * monic[i], n);
  }
  prod.resize(e);
  return prod;
}

}  // namespace

PresentedRing::Atom PresentedRing::build_atom(const AtomSpec& spec) {
  const int64_t n = spec.modulus;
  if (n < 2) throw InputError("degenerate modulus: n must be >= 2");
  if (n > int64_t(1) << 30) throw InputError("modulus too large");

  IntVec monic{0, 1};
  if (spec.var) {
    const Poly* best = nullptr;
    for (const auto& f : spec.relations) {
      if (f.degree() < 0 || gcd64(mod_floor(f.coeffs.back(), n), n) != 1) continue;
      if (best == nullptr || f.degree() < best->degree()) best = &f;
    }
    if (best == nullptr) {
      throw InputError("infinite presentation: at least one relation must be monic in " + *spec.var);
    }
    const int64_t inv = inverse_mod(best->coeffs.back(), n);
    monic.clear();
    for (int64_t c : best->coeffs) monic.push_back(mod_floor(checked_mul(mod_floor(c, n), inv), n));
  }
  const size_t e = monic.size() - 1;

  Atom atom{.modulus = n, .var = spec.var.value_or(""), .monic = monic, .degree = e, .offset = 0,
            .lattice = {FiniteRing::zero_ring(), {}}};
  if (e == 0) return atom;  // a unit relation collapses the ring

  auto reduce = [&](const Poly& p) {
    IntVec c(std::max<size_t>(p.coeffs.size(), e), 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] = mod_floor(p.coeffs[i], n);
    IntVec one(e, 0);
    one[0] = 1;
    return poly_mul_mod(one, c, monic, n);
  };

  std::vector<IntVec> relations;
  for (size_t i = 0; i < e; ++i) {
    IntVec v(e, 0);
    v[i] = n;
    relations.push_back(std::move(v));
  }
  for (const auto& f : spec.relations) {
    const IntVec r = reduce(f);
    for (size_t i = 0; i < e; ++i) {
      IntVec xi(e, 0);
      xi[i] = 1;
      relations.push_back(poly_mul_mod(xi, r, monic, n));
    }
  }
  IntVec unity(e, 0);
  unity[0] = 1;
  auto mul = [&](const IntVec& u, const IntVec& v) { return poly_mul_mod(u, v, monic, n); };
  atom.lattice = ring_from_lattice(e, mul, unity, relations);
  return atom;
}

PresentedRing::PresentedRing(RingSpec spec) : spec_(std::move(spec)), ring_(FiniteRing::zero_ring()) {
  if (spec_.atoms.empty()) throw InputError("empty ring presentation");
  std::vector<FiniteRing> parts;
  size_t offset = 0;
  for (const auto& a : spec_.atoms) {
    Atom atom = build_atom(a);
    atom.offset = offset;
    offset += atom.lattice.ring.rank();
    parts.push_back(atom.lattice.ring);
    atoms_.push_back(std::move(atom));
  }
  ring_ = product_of(parts);
}

IntVec PresentedRing::reduce_poly(const Atom& a, const Poly& p) const {
  const size_t e = a.degree;
  IntVec c(std::max<size_t>(p.coeffs.size(), e), 0);
  for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] = mod_floor(p.coeffs[i], a.modulus);
  IntVec one(e, 0);
  if (e == 0) return one;
  one[0] = 1;
  return poly_mul_mod(one, c, a.monic, a.modulus);
}

Elem PresentedRing::from_poly(size_t atom, const Poly& p) const {
  const Atom& a = atoms_.at(atom);
  IntVec full(ring_.rank(), 0);
  if (a.lattice.ring.rank() > 0) {
    const IntVec local = a.lattice.map.project(reduce_poly(a, p));
    std::copy(local.begin(), local.end(), full.begin() + ptrdiff_t(a.offset));
  }
  return ring_.index(std::span<const int64_t>(full));
}

Elem PresentedRing::from_integer(int64_t c) const { return ring_.scale(ring_.one(), c); }

Elem PresentedRing::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw InputError("empty element");
  if (text.front() == '(') {
    if (text.back() != ')') throw InputError("unterminated tuple element '" + std::string(text) + "'");
    auto parts = split_top(text.substr(1, text.size() - 2), ';');
    if (parts.size() != atoms_.size()) {
      throw InputError("tuple element needs " + std::to_string(atoms_.size()) + " components");
    }
    Elem acc = ring_.zero();
    for (size_t i = 0; i < parts.size(); ++i)
      acc = ring_.add(acc, from_poly(i, parse_poly(parts[i], atoms_[i].var)));
    return acc;
  }
  if (atoms_.size() == 1) return from_poly(0, parse_poly(text, atoms_[0].var));
  Poly p = parse_poly(text, "");
  return from_integer(p.coeffs.empty() ? 0 : p.coeffs[0]);
}

std::vector<Elem> PresentedRing::parse_elements(std::string_view text) const {
  std::vector<Elem> out;
  if (trim(text).empty()) return out;
  for (auto part : split_top(text, ',')) out.push_back(parse_element(part));
  return out;
}

std::string PresentedRing::format(Elem x) const {
  const auto coeffs = ring_.element(x).coeffs;
  std::vector<std::string> parts;
  for (const auto& a : atoms_) {
    const size_t k = a.lattice.ring.rank();
    IntVec ambient(a.degree, 0);
    for (size_t j = 0; j < k; ++j) {
      const int64_t y = coeffs[a.offset + j];
      for (size_t i = 0; i < a.degree; ++i)
        ambient[i] = mod_floor(ambient[i] + checked_mul(y, mod_floor(a.lattice.map.basis[j][i], a.modulus)), a.modulus);
    }
    Poly p{ambient};
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
    parts.push_back(to_string(p, a.var));
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
  return s + ")";
}

std::string PresentedRing::format_ideal_gens(const FinIdeal& i) const {
  if (i.gens().empty()) return "(0)";
  std::string s = "(";
  for (size_t k = 0; k < i.gens().size(); ++k) s += (k ? ", " : "") + format(i.gens()[k]);
  return s + ")";
}

FiniteRing construct(const RingSpec& spec) { return PresentedRing(spec).ring(); }

}  // namespace taf
