#include "taf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "taf/absorbing.hpp"
#include "taf/checked.hpp"
#include "taf/commands.hpp"
#include "taf/factorize.hpp"
#include "taf/presentation.hpp"
#include "taf/quadratic.hpp"

namespace taf {

namespace {

using Clock = std::chrono::steady_clock;

// Thrown by a check to fail its criterion with a message.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

FinIdeal gen(const PresentedRing& p, const std::string& text) {
  const auto g = p.parse_elements(text);
  return ideal_generate(p.ring(), std::span<const Elem>(g));
}

CriterionResult run(int id, std::string name, double limit_ms, const std::function<std::string()>& body) {
  CriterionResult r{id, std::move(name), CriterionStatus::Fail, "", 0, limit_ms};
  const auto t0 = Clock::now();
  try {
    r.detail = body();
    r.status = CriterionStatus::Pass;
  } catch (const LimitExceeded& e) {
    r.status = CriterionStatus::Skip;
    r.detail = std::string("skipped: ") + e.what();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (r.status == CriterionStatus::Pass && limit_ms > 0 && r.elapsed_ms > limit_ms) {
    r.status = CriterionStatus::Fail;
    r.detail = "runtime limit exceeded: " + r.detail;
  }
  return r;
}

// The order-16 ring, or with `corrupt` a copy whose table breaks associativity.
FiniteRing smallest_non_taf(bool corrupt) {
  const FiniteRing t = construct(parse_ringspec("Z/8[x]/(x^2, 2x)"));
  if (!corrupt) return t;
  std::vector<std::vector<IntVec>> table(t.rank(), std::vector<IntVec>(t.rank()));
  for (size_t i = 0; i < t.rank(); ++i)
    for (size_t j = 0; j < t.rank(); ++j) table[i][j] = t.structure(i, j);
  // 1 * x := 4 + x keeps commutativity and compatibility but not associativity
  table[0][1] = table[1][0] = {4, 1};
  return FiniteRing(t.orders(), std::move(table), t.unity_coeffs());
}

std::vector<std::string> curated_family() {
  std::vector<std::string> out;
  for (int p : {2, 3}) {
    const std::string s = std::to_string(p);
    const std::string irreducible = p == 2 ? "x^2 + x + 1" : "x^2 + 1";
    out.push_back("Z/" + std::to_string(p * p));
    out.push_back("Z/" + s + "[x]/(x^2)");
    out.push_back("Z/" + s + "[x]/(" + irreducible + ")");
    out.push_back("Z/" + std::to_string(p * p * p));
    out.push_back("Z/" + s + "[x]/(x^3)");
    out.push_back("Z/" + std::to_string(p * p) + "[x]/(" + s + "x, x^2)");
  }
  return out;
}

// Witness triple congruent to `expected` modulo I, up to order.
bool same_residues(const QuadIdeal& i, std::vector<QuadElement> got, std::vector<QuadElement> expected) {
  auto key = [&](const QuadElement& e) {
    const QuadElement r = reduce(i, e);
    return std::pair{r.y, r.x};
  };
  std::vector<std::pair<int64_t, int64_t>> a, b;
  for (const auto& e : got) a.push_back(key(e));
  for (const auto& e : expected) b.push_back(key(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string criterion_1(const Limits& limits) {
  const Json ta = cmd_quad("ta", -7, "3+w", false, false, limits);
  require(ta["verdict"] == false, "(3 + sqrt -7) reported TA");
  const auto& c = ta["certificate"];
  require(c["kind"] == "quad-ta-witness", "no witness certificate");
  const QuadOrder D(-7);
  const QuadIdeal i = ideal_from_gens(D, {{3, 1}});
  const std::vector<QuadElement> w{parse_quad_element(c["a"].get<std::string>()),
                                   parse_quad_element(c["b"].get<std::string>()),
                                   parse_quad_element(c["c"].get<std::string>())};
  require(same_residues(i, w, {{2, 0}, {2, 0}, {4, 0}}), "witness is not equivalent to (2, 2, 4)");
  require(verify_report(ta).empty(), "TA report does not re-verify");

  const Json f = cmd_quad("factor", -7, "3+w", false, false, limits);
  require(f["verdict"] == false, "a TA-factorization of (3 + sqrt -7) was reported");
  require(f["certificate"]["kind"] == "quad-exhausted-search", "no exhausted-search certificate");
  require(f["certificate"]["quotient_order"] == 16, "quotient order is not 16");
  require(verify_report(f).empty(), "factor report does not re-verify");
  return "witness (" + c["a"].get<std::string>() + ", " + c["b"].get<std::string>() + ", " +
         c["c"].get<std::string>() + "); no factorization over " + f["certificate"]["lattice_size"].dump() +
         " ideals above I";
}

std::string criterion_2(const Limits& limits, bool corrupt) {
  const FiniteRing t = smallest_non_taf(corrupt);
  require(t.order() == 16, "order is " + std::to_string(t.order()));
  require_within_guard(t, limits);
  const PresentedRing p(parse_ringspec("Z/8[x]/(x^2, 2x)"));
  const auto w = square_comparability_witness(t, limits);
  require(w.has_value(), "no square-comparability witness");
  require(w->ideal == gen(p, "x"), "witness ideal is not (x)");
  require(*w->maximal == gen(p, "2, x"), "maximal ideal is not (2, x)");
  require(verify_certificate(t, *w, limits), "witness does not verify");
  const TAFAudit audit = is_taf(t, limits);
  require(!audit.is_taf, "ring audited as TAF");
  require(verify_certificate(t, *audit.certificate, limits), "audit certificate does not verify");
  size_t checked = 0;
  for (const auto& spec : curated_family()) {
    const FiniteRing r = construct(parse_ringspec(spec));
    const TAFAudit a = is_taf(r, limits);
    require(a.is_taf, spec + " audited as not TAF");
    for (const auto& [i, f] : a.table) require(verify_factorization(r, i, f, limits), spec + ": table entry fails");
    ++checked;
  }
  return "(x) incomparable with (2, x)^2 = (4); " + std::to_string(checked) + " curated rings TAF";
}

std::string criterion_3(const Limits& limits) {
  const PresentedRing p(parse_ringspec("Z/9[x]/(x^3)"));
  const FiniteRing& r = p.ring();
  require(r.order() == 729, "order is " + std::to_string(r.order()));
  require_within_guard(r, limits);
  const FinIdeal i = gen(p, "x^2 + 3");
  const FinIdeal m = gen(p, "3, x");
  const FinIdeal m2 = ideal_product(r, m, m);
  require(is_maximal(r, m), "(3, x) is not maximal");
  require(ideal_radical(r, i) == m, "radical of (x^2 + 3) is not (3, x)");
  NonTAFCertificate c;
  c.kind = NonTAFKind::IncomparableWithSquare;
  c.ideal = i;
  c.maximal = m;
  c.maximal_square = m2;
  for (Elem e : i.elements())
    if (!m2.contains(e)) {
      c.in_ideal_not_square = e;
      break;
    }
  for (Elem e : m2.elements())
    if (!i.contains(e)) {
      c.in_square_not_ideal = e;
      break;
    }
  require(c.in_ideal_not_square && c.in_square_not_ideal, "(x^2 + 3) and (3, x)^2 are comparable");
  require(verify_certificate(r, c, limits), "certificate does not verify");
  return p.format(*c.in_ideal_not_square) + " in I not M^2; " + p.format(*c.in_square_not_ideal) +
         " in M^2 not I";
}

std::string criterion_4(const Limits& limits) {
  require_within_guard(non_taf_target(), limits);
  int taf = 0, not_taf = 0;
  for (int64_t d = -200; d <= 200; ++d) {
    if (d == 0 || d == 1 || mod_floor(d, 4) != 1 || !is_squarefree(d)) continue;
    const QuadClassification c = classify_quadratic_order(d);
    require((c.verdict == QuadVerdict::TAF) == (mod_floor(d, 8) == 5), "verdict wrong for d = " + std::to_string(d));
    require(verify_classification(c), "certificate fails for d = " + std::to_string(d));
    (c.verdict == QuadVerdict::TAF ? taf : not_taf)++;
  }
  require(classify_quadratic_order(-11).verdict == QuadVerdict::TAF, "d = -11");
  require(classify_quadratic_order(-7).verdict == QuadVerdict::NotTAF, "d = -7");
  require(classify_quadratic_order(5).verdict == QuadVerdict::TAF, "d = 5");
  require(classify_quadratic_order(17).verdict == QuadVerdict::NotTAF, "d = 17");
  return std::to_string(taf) + " TAF, " + std::to_string(not_taf) + " not TAF";
}

std::string criterion_5(const Limits& limits) {
  const Json f = cmd_quad("factor", -11, "3+w", false, false, limits);
  require(f["verdict"] == true, "no factorization of (3 + sqrt -11)");
  require(verify_report(f).empty(), "factorization does not re-multiply exactly");
  const QuadOrder D(-11);
  const auto q4 = quotient_finite(D, ideal_from_gens(D, {{4, 0}, {3, 1}}), limits);
  const auto q5 = quotient_finite(D, ideal_from_gens(D, {{5, 0}, {3, 1}}), limits);
  require(q4.ring().order() == 4 && is_isomorphic_to_zn(q4.ring(), 4), "D/(4, 3 + w) is not Z/4");
  require(q5.ring().order() == 5 && is_isomorphic_to_zn(q5.ring(), 5), "D/(5, 3 + w) is not Z/5");
  std::string factors;
  for (const auto& j : f["certificate"]["factors"]) factors += j["gens"].get<std::string>();
  return "(3 + w) = " + factors;
}

std::string criterion_6(const Limits& limits) {
  size_t rings = 0;
  for (int64_t p : {2, 3}) {
    int64_t pn = 1;
    for (int n = 1; n <= 5; ++n) {
      pn *= p;
      const PresentedRing zr(parse_ringspec("Z/" + std::to_string(pn)));
      const FiniteRing& r = zr.ring();
      const FinIdeal P = gen(zr, std::to_string(p));
      const FinIdeal P2 = ideal_product(r, P, P);
      const std::string where = "Z/" + std::to_string(pn);
      for (const auto& i : enumerate_ideals(r, limits)) {
        if (!is_proper(r, i)) continue;
        const bool ta = ta_check(r, i, limits).is_ta;
        require(ta == (i == P || i == P2), where + ": TA-ideals are not exactly (p), (p^2)");
        if (!ta) continue;
        require(is_primary(r, i) && ideal_radical(r, i) == P, where + ": TA-ideal not (p)-primary");
        require(is_prime(r, i) || i == ideal_product(r, P, P), where + ": TA-ideal neither prime nor P*P");
      }
      ++rings;
    }
  }
  return std::to_string(rings) + " chained rings";
}

std::vector<std::pair<std::string, FiniteRing>> corpus_products(const Limits& limits) {
  const auto& c = acceptance_corpus();
  std::vector<std::pair<std::string, FiniteRing>> out;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i; j < c.size(); ++j) {
      const FiniteRing a = construct(parse_ringspec(c[i]));
      const FiniteRing b = construct(parse_ringspec(c[j]));
      if (a.order() * b.order() > 4096) continue;
      FiniteRing ab = direct_product(a, b);
      require_within_guard(ab, limits);
      out.emplace_back(c[i] + " x " + c[j], std::move(ab));
    }
  return out;
}

std::string criterion_7(const Limits& limits) {
  const auto& c = acceptance_corpus();
  std::vector<bool> taf;
  for (const auto& spec : c) taf.push_back(is_taf(construct(parse_ringspec(spec)), limits).is_taf);
  size_t pairs = 0;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i; j < c.size(); ++j) {
      const FiniteRing a = construct(parse_ringspec(c[i]));
      const FiniteRing b = construct(parse_ringspec(c[j]));
      if (a.order() * b.order() > 4096) continue;
      const bool ab = is_taf(direct_product(a, b), limits).is_taf;
      require(ab == (taf[i] && taf[j]), c[i] + " x " + c[j] + ": product verdict differs");
      ++pairs;
    }
  return std::to_string(pairs) + " pairs";
}

std::string criterion_8(const Limits& limits) {
  std::vector<std::pair<std::string, FiniteRing>> rings;
  for (const auto& spec : acceptance_corpus()) rings.emplace_back(spec, construct(parse_ringspec(spec)));
  for (auto& pr : corpus_products(limits)) rings.push_back(std::move(pr));
  size_t tested = 0, ideals_checked = 0;
  for (const auto& [name, r] : rings) {
    const auto ideals = enumerate_ideals(r, limits);
    if (ideals.size() > 20) continue;
    const auto closure = factorable_by_closure(r, ideals.size(), limits);
    for (const auto& i : ideals) {
      if (!is_proper(r, i)) continue;
      const auto f = ta_factorization(r, i, limits);
      const bool oracle = std::find(closure.begin(), closure.end(), i) != closure.end();
      require(f.has_value() == oracle, name + ": search and oracle disagree");
      if (f) require(verify_factorization(r, i, *f, limits), name + ": factorization does not re-verify");
      ++ideals_checked;
    }
    ++tested;
  }
  return std::to_string(tested) + " rings, " + std::to_string(ideals_checked) + " ideals";
}

std::string criterion_9(const Limits& limits) {
  std::vector<std::pair<std::string, FiniteRing>> rings;
  std::vector<std::string> specs = acceptance_corpus();
  for (const auto& s : curated_family()) specs.push_back(s);
  for (const char* s : {"Z/8[x]/(x^2, 2x)", "Z/9[x]/(x^3)", "Z/32", "Z/243"}) specs.push_back(s);
  for (const auto& s : specs) rings.emplace_back(s, construct(parse_ringspec(s)));
  for (auto& pr : corpus_products(limits)) rings.push_back(std::move(pr));
  size_t found = 0;
  for (const auto& [name, r] : rings) {
    for (const auto& i : enumerate_ideals(r, limits)) {
      if (!is_proper(r, i) || !ta_check(r, i, limits).is_ta) continue;
      TAStructure s;
      try {
        s = ta_structure(r, i, limits);
      } catch (const std::logic_error& e) {
        throw Failure(name + ": " + e.what());
      }
      require(verify_ta_structure(r, i, s), name + ": structure does not re-verify");
      ++found;
    }
  }
  return std::to_string(found) + " TA-ideals in " + std::to_string(rings.size()) + " rings, 0 violations";
}

}  // namespace

const std::vector<std::string>& acceptance_corpus() {
  static const std::vector<std::string> c{"Z/2",  "Z/3",          "Z/4",  "Z/2[x]/(x^2)",     "Z/2[x]/(x^2 + x + 1)",
                                          "Z/8",  "Z/9",          "Z/27", "Z/8[x]/(x^2, 2x)", "Z/6"};
  return c;
}

std::vector<FinIdeal> factorable_by_closure(const FiniteRing& r, size_t max_length, const Limits& limits) {
  std::vector<FinIdeal> ta;
  for (const auto& i : enumerate_ideals(r, limits))
    if (is_proper(r, i) && ta_check(r, i, limits).is_ta) ta.push_back(i);
  std::set<FinIdeal> seen(ta.begin(), ta.end());
  std::vector<FinIdeal> level = ta;
  for (size_t len = 2; len <= max_length && !level.empty(); ++len) {
    std::vector<FinIdeal> next;
    for (const auto& a : level)
      for (const auto& j : ta) {
        FinIdeal p = ideal_product(r, a, j);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    level = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  const Limits& l = o.limits;
  return {
      run(1, "non-TA ideal (3 + sqrt -7) and its exhausted search", 1000, [&] { return criterion_1(l); }),
      run(2, "smallest non-TAF ring and the curated TAF family", 10000,
          [&] { return criterion_2(l, o.inject_corruption); }),
      run(3, "cubic quotient incomparability", 5000, [&] { return criterion_3(l); }),
      run(4, "quadratic orders d = 1 mod 4, |d| <= 200", 30000, [&] { return criterion_4(l); }),
      run(5, "worked factorization of (3 + sqrt -11)", 1000, [&] { return criterion_5(l); }),
      run(6, "chained-ring laws in Z/p^n", 5000, [&] { return criterion_6(l); }),
      run(7, "product stability of TAF", 60000, [&] { return criterion_7(l); }),
      run(8, "factorization search against the closure oracle", 60000, [&] { return criterion_8(l); }),
      run(9, "TA structure conformance", 0, [&] { return criterion_9(l); }),
  };
}

const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass:
      return "PASS";
    case CriterionStatus::Fail:
      return "FAIL";
    case CriterionStatus::Skip:
      return "SKIP";
  }
  return "FAIL";
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  if (r.limit_ms > 0) {
    std::snprintf(timing, sizeof timing, "%.1f ms / %.0f ms", r.elapsed_ms, r.limit_ms);
  } else {
    std::snprintf(timing, sizeof timing, "%.1f ms", r.elapsed_ms);
  }
  std::ostringstream os;
  os << '[' << to_string(r.status) << "] " << r.id << ' ' << r.name << " (" << timing << "): " << r.detail;
  return os.str();
}

}  // namespace taf
