#include "taf/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "taf/checked.hpp"
#include "taf/codec.hpp"

namespace taf {

Json make_report(const std::string& command, Json input, Json verdict, Json certificate) {
  return {{"schema", kReportSchema}, {"command", command},       {"input", std::move(input)},
          {"verdict", std::move(verdict)}, {"certificate", std::move(certificate)}, {"timing_ms", 0.0},
          {"limits_hit", Json::array()}};
}

Json make_error(const std::string& command, const std::string& type, const std::string& message) {
  return {{"schema", kReportSchema}, {"command", command}, {"error", {{"type", type}, {"message", message}}}};
}

// ---------------------------------------------------------------- structure

namespace {

const std::map<std::string, std::vector<std::string>>& required_fields() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"ta-witness", {"ideal", "a", "b", "c"}},
      {"ta-structure", {"ideal", "shape", "primes"}},
      {"factorization", {"target", "factors"}},
      {"exhausted-search", {"ideal"}},
      {"incomparable-with-square",
       {"ideal", "maximal", "maximal_square", "in_ideal_not_square", "in_square_not_ideal"}},
      {"taf-table", {"entries"}},
      {"ideal-list", {"ideals"}},
      {"quad-ta-witness", {"ideal", "a", "b", "c"}},
      {"quad-ta-exhaustive", {"ideal", "quotient_order"}},
      {"quad-factorization", {"target", "factors"}},
      {"quad-exhausted-search", {"ideal", "quotient_order", "lattice_size"}},
      {"residue-field", {"d", "residue_constant", "field_by_polynomial", "field_by_quotient"}},
      {"epimorphism", {"d", "target_ring", "well_defined", "surjective", "target_certificate"}},
      {"classification-table", {"rows"}},
      {"acceptance", {"criteria"}},
      {"verification", {"problems"}},
  };
  return m;
}

bool is_ideal_object(const Json& j) {
  return j.is_object() && ((j.contains("gens") && j["gens"].is_array()) || (j.contains("hnf") && j["hnf"].is_array()));
}

void check_certificate(const Json& c, const std::string& where, std::vector<std::string>& errs) {
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string()) {
    errs.push_back(where + ": certificate must be an object with a string kind");
    return;
  }
  const auto kind = c["kind"].get<std::string>();
  auto it = required_fields().find(kind);
  if (it == required_fields().end()) {
    errs.push_back(where + ": unknown certificate kind '" + kind + "'");
    return;
  }
  for (const auto& f : it->second)
    if (!c.contains(f)) errs.push_back(where + ": kind '" + kind + "' requires field '" + f + "'");
  for (const char* f : {"ideal", "target", "maximal", "maximal_square"})
    if (c.contains(f) && !is_ideal_object(c[f])) errs.push_back(where + ": field '" + f + "' must be an ideal");
  if (c.contains("factors")) {
    if (!c["factors"].is_array() || c["factors"].empty()) {
      errs.push_back(where + ": factors must be a nonempty array");
    } else {
      for (const auto& f : c["factors"])
        if (!is_ideal_object(f)) errs.push_back(where + ": every factor must be an ideal");
    }
  }
  if (c.contains("target_certificate")) check_certificate(c["target_certificate"], where + ".target_certificate", errs);
}

}  // namespace

std::vector<std::string> validate_report(const Json& r) {
  std::vector<std::string> errs;
  if (!r.is_object()) return {"report must be a JSON object"};
  if (!r.contains("schema") || r["schema"] != kReportSchema) errs.push_back("schema must be 1");
  if (!r.contains("command") || !r["command"].is_string()) errs.push_back("command must be a string");
  if (r.contains("error")) {
    const auto& e = r["error"];
    if (!e.is_object() || !e.contains("type") || !e.contains("message")) errs.push_back("error needs type and message");
    return errs;
  }
  if (!r.contains("input") || !r["input"].is_object()) errs.push_back("input must be an object");
  if (!r.contains("verdict") || !(r["verdict"].is_boolean() || r["verdict"].is_string() || r["verdict"].is_number()))
    errs.push_back("verdict must be a boolean, string or number");
  if (!r.contains("timing_ms") || !r["timing_ms"].is_number()) errs.push_back("timing_ms must be a number");
  if (!r.contains("limits_hit") || !r["limits_hit"].is_array()) errs.push_back("limits_hit must be an array");
  if (!r.contains("certificate")) {
    errs.push_back("certificate is required (null when absent)");
  } else if (!r["certificate"].is_null()) {
    check_certificate(r["certificate"], "certificate", errs);
  } else if (r.contains("verdict") && r["verdict"] == false) {
    errs.push_back("a false verdict must carry a certificate");
  }
  return errs;
}

// ---------------------------------------------------------------- content

namespace {

Limits limits_of(const Json& input) {
  Limits l;
  if (input.contains("guard")) l.enumeration_guard = input["guard"].get<uint64_t>();
  return l;
}

void expect(bool ok, const std::string& what, std::vector<std::string>& errs) {
  if (!ok) errs.push_back(what);
}

void verify_finite(const Json& r, std::vector<std::string>& errs) {
  const Json& in = r["input"];
  const Json& c = r["certificate"];
  const auto kind = c["kind"].get<std::string>();
  const PresentedRing p(parse_ringspec(in.at("ring").get<std::string>()));
  const FiniteRing& R = p.ring();
  const Limits limits = limits_of(in);
  const bool verdict = r["verdict"].is_boolean() && r["verdict"].get<bool>();

  auto echoed = [&](const FinIdeal& i) {
    if (in.contains("ideal")) expect(parse_ideal(p, in["ideal"].get<std::string>()) == i, "certificate ideal differs from the input", errs);
  };

  if (kind == "ta-witness") {
    const FinIdeal i = ideal_from_json(p, c["ideal"]);
    echoed(i);
    const TAWitness w{p.parse_element(c["a"].get<std::string>()), p.parse_element(c["b"].get<std::string>()),
                      p.parse_element(c["c"].get<std::string>())};
    expect(!verdict, "witness attached to a true verdict", errs);
    expect(verify_ta_witness(R, i, w), "TA witness does not refute", errs);
  } else if (kind == "ta-structure") {
    const FinIdeal i = ideal_from_json(p, c["ideal"]);
    echoed(i);
    TAStructure s;
    s.kind = c["shape"] == "prime-square" ? TAKind::PrimeSquare : TAKind::TwoPrimes;
    for (const auto& q : c["primes"]) s.primes.push_back(ideal_from_json(p, q));
    expect(verdict, "structure attached to a false verdict", errs);
    expect(ta_check(R, i, limits).is_ta, "ideal is not TA", errs);
    expect(verify_ta_structure(R, i, s), "structure does not verify", errs);
  } else if (kind == "factorization") {
    const FinIdeal target = ideal_from_json(p, c["target"]);
    echoed(target);
    TAFactorization f;
    for (const auto& j : c["factors"]) f.factors.push_back(ideal_from_json(p, j));
    expect(verdict, "factorization attached to a false verdict", errs);
    expect(verify_factorization(R, target, f, limits), "factors do not re-multiply to the target as proper TA-ideals",
           errs);
  } else if (kind == "exhausted-search" || kind == "incomparable-with-square") {
    const NonTAFCertificate cert = non_taf_from_json(p, c);
    if (r["command"] == "factor") echoed(cert.ideal);
    expect(!verdict, "non-factorization certificate attached to a true verdict", errs);
    expect(verify_certificate(R, cert, limits), "certificate does not verify", errs);
  } else if (kind == "taf-table") {
    expect(verdict, "table attached to a false verdict", errs);
    std::vector<FinIdeal> covered;
    for (const auto& e : c["entries"]) {
      const FinIdeal i = ideal_from_json(p, e["ideal"]);
      TAFactorization f;
      for (const auto& j : e["factors"]) f.factors.push_back(ideal_from_json(p, j));
      expect(verify_factorization(R, i, f, limits), "table entry does not verify", errs);
      covered.push_back(i);
    }
    size_t proper = 0;
    for (const auto& i : enumerate_ideals(R, limits)) proper += is_proper(R, i);
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    expect(covered.size() == proper, "table does not cover every proper ideal", errs);
  } else if (kind == "ideal-list") {
    for (const auto& e : c["ideals"]) {
      const FinIdeal i = ideal_from_json(p, e);
      expect(e["prime"] == is_prime(R, i), "prime flag is wrong", errs);
      expect(e["maximal"] == is_maximal(R, i), "maximal flag is wrong", errs);
      expect(e["ta"] == (is_proper(R, i) && ta_check(R, i, limits).is_ta), "TA flag is wrong", errs);
    }
  }
}

void verify_quad(const Json& r, std::vector<std::string>& errs) {
  const Json& in = r["input"];
  const Json& c = r["certificate"];
  const auto kind = c["kind"].get<std::string>();
  const Limits limits = limits_of(in);
  const bool verdict = r["verdict"].is_boolean() && r["verdict"].get<bool>();
  const QuadOrder D(in.at("d").get<int64_t>(), in.value("basis", "sqrt") == "half" ? QuadBasis::Half : QuadBasis::Sqrt);
  const QuadIdeal echoed = ideal_from_gens(D, parse_quad_elements(in.at("ideal").get<std::string>()));
  const QuadIdeal i = quad_ideal_from_json(c.contains("target") ? c["target"] : c["ideal"]);
  expect(i == echoed, "certificate ideal differs from the input", errs);

  if (kind == "quad-ta-witness") {
    const QuadTAWitness w{parse_quad_element(c["a"].get<std::string>()), parse_quad_element(c["b"].get<std::string>()),
                          parse_quad_element(c["c"].get<std::string>())};
    expect(!verdict, "witness attached to a true verdict", errs);
    expect(verify_quad_witness(D, i, w), "witness does not refute", errs);
  } else if (kind == "quad-ta-exhaustive") {
    expect(verdict, "exhaustive check attached to a false verdict", errs);
    expect(ta_check_quad(D, i, limits).is_ta, "ideal is not TA", errs);
  } else if (kind == "quad-factorization") {
    QuadFactorization f;
    for (const auto& j : c["factors"]) f.factors.push_back(quad_ideal_from_json(j));
    expect(verdict, "factorization attached to a false verdict", errs);
    expect(verify_quad_factorization(D, i, f, limits), "factors do not re-multiply exactly to the target", errs);
  } else if (kind == "quad-exhausted-search") {
    expect(!verdict, "exhausted search attached to a true verdict", errs);
    expect(!ta_factorization_quad(D, i, limits).has_value(), "a factorization exists", errs);
  }
}

void verify_classification_json(const Json& c, const std::string& verdict, std::vector<std::string>& errs) {
  const int64_t d = c.at("d").get<int64_t>();
  const QuadClassification fresh = classify_quadratic_order(d);
  expect(verdict == to_string(fresh.verdict), "verdict for d = " + std::to_string(d) + " does not reproduce", errs);
  expect(c["kind"] == classification_kind(fresh), "certificate kind does not match the verdict", errs);
  expect(verify_classification(fresh), "classification checks fail", errs);
  if (fresh.verdict == QuadVerdict::TAF) {
    expect(c["field_by_polynomial"] == true && c["field_by_quotient"] == true, "field checks not recorded", errs);
  } else {
    expect(c["well_defined"] == true && c["surjective"] == true, "homomorphism checks not recorded", errs);
    const PresentedRing t(parse_ringspec(c["target_ring"].get<std::string>()));
    expect(verify_certificate(t.ring(), non_taf_from_json(t, c["target_certificate"])),
           "certificate for the target ring does not verify", errs);
  }
}

}  // namespace

std::vector<std::string> verify_report(const Json& r) {
  std::vector<std::string> errs = validate_report(r);
  if (!errs.empty() || r.contains("error") || r["certificate"].is_null()) return errs;
  const auto kind = r["certificate"]["kind"].get<std::string>();
  try {
    if (kind.rfind("quad-", 0) == 0) {
      verify_quad(r, errs);
    } else if (kind == "residue-field" || kind == "epimorphism") {
      verify_classification_json(r["certificate"], r["verdict"].get<std::string>(), errs);
    } else if (kind == "classification-table") {
      bool consistent = true;
      for (const auto& row : r["certificate"]["rows"]) {
        const int64_t d = row.at("d").get<int64_t>();
        const QuadClassification fresh = classify_quadratic_order(d);
        expect(row["verdict"] == to_string(fresh.verdict), "row d = " + std::to_string(d) + " does not reproduce",
               errs);
        consistent = consistent && (fresh.verdict == QuadVerdict::TAF) == (mod_floor(d, 8) == 5);
      }
      expect(r["verdict"] == consistent, "table verdict does not match its rows", errs);
    } else if (kind != "acceptance" && kind != "verification") {
      verify_finite(r, errs);
    }
  } catch (const std::exception& e) {
    errs.push_back(std::string("re-verification failed: ") + e.what());
  }
  return errs;
}

// ---------------------------------------------------------------- text

namespace {

void flatten_into(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(path, "{}");
    for (auto it = j.begin(); it != j.end(); ++it) flatten_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(path, "[]");
    for (size_t k = 0; k < j.size(); ++k) flatten_into(j[k], path + "[" + std::to_string(k) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& report) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(report, "", out);
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : flatten(report)) os << k << ": " << v << '\n';
  return os.str();
}

}  // namespace taf
