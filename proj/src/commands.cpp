#include "taf/commands.hpp"

#include <chrono>
#include <optional>

#include "taf/absorbing.hpp"
#include "taf/acceptance.hpp"
#include "taf/checked.hpp"
#include "taf/codec.hpp"
#include "taf/factorize.hpp"
#include "taf/presentation.hpp"
#include "taf/quadratic.hpp"

namespace taf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json finish(Json report, Clock::time_point t0) {
  report["timing_ms"] = ms_since(t0);
  return report;
}

Json finite_input(const std::string& ring, const Limits& limits) {
  return {{"ring", ring}, {"guard", limits.enumeration_guard}};
}

}  // namespace

Json cmd_check_ta(const std::string& ring, const std::string& ideal, const Limits& limits) {
  const auto t0 = Clock::now();
  const PresentedRing p(parse_ringspec(ring));
  require_within_guard(p.ring(), limits);
  const FinIdeal i = parse_ideal(p, ideal);
  Json input = finite_input(ring, limits);
  input["ideal"] = ideal;
  const TAResult r = ta_check(p.ring(), i, limits);
  Json cert;
  if (r.witness) {
    cert = {{"kind", "ta-witness"},
            {"ideal", ideal_json(p, i)},
            {"a", p.format(r.witness->a)},
            {"b", p.format(r.witness->b)},
            {"c", p.format(r.witness->c)}};
  } else {
    const TAStructure s = ta_structure(p.ring(), i, limits);
    Json primes = Json::array();
    for (const auto& q : s.primes) primes.push_back(ideal_json(p, q));
    cert = {{"kind", "ta-structure"}, {"ideal", ideal_json(p, i)}, {"shape", to_string(s.kind)}, {"primes", primes}};
  }
  return finish(make_report("check-ta", input, r.is_ta, cert), t0);
}

Json cmd_factor(const std::string& ring, const std::string& ideal, bool shortest, const Limits& limits) {
  const auto t0 = Clock::now();
  const PresentedRing p(parse_ringspec(ring));
  require_within_guard(p.ring(), limits);
  const FinIdeal i = parse_ideal(p, ideal);
  Json input = finite_input(ring, limits);
  input["ideal"] = ideal;
  input["shortest"] = shortest;
  const auto f = ta_factorization(p.ring(), i, limits, shortest);
  Json cert;
  if (f) {
    cert = {{"kind", "factorization"}, {"target", ideal_json(p, i)}, {"factors", factors_json(p, f->factors)}};
  } else {
    cert = {{"kind", "exhausted-search"},
            {"ideal", ideal_json(p, i)},
            {"lattice_size", divisors_above(p.ring(), i, limits).size()}};
  }
  return finish(make_report("factor", input, f.has_value(), cert), t0);
}

Json cmd_check_taf(const std::string& ring, const Limits& limits) {
  const auto t0 = Clock::now();
  const PresentedRing p(parse_ringspec(ring));
  const TAFAudit audit = is_taf(p.ring(), limits);
  Json cert;
  if (audit.is_taf) {
    Json entries = Json::array();
    for (const auto& [i, f] : audit.table)
      entries.push_back({{"ideal", ideal_json(p, i)}, {"factors", factors_json(p, f.factors)}});
    cert = {{"kind", "taf-table"}, {"entries", entries}};
  } else {
    cert = non_taf_json(p, *audit.certificate);
  }
  return finish(make_report("check-taf", finite_input(ring, limits), audit.is_taf, cert), t0);
}

Json cmd_ideals(const std::string& ring, const IdealFilter& filter, const Limits& limits) {
  const auto t0 = Clock::now();
  const PresentedRing p(parse_ringspec(ring));
  const FiniteRing& r = p.ring();
  Json input = finite_input(ring, limits);
  input["ta_only"] = filter.ta_only;
  input["prime_only"] = filter.prime_only;
  input["maximal_only"] = filter.maximal_only;
  Json list = Json::array();
  for (const auto& i : enumerate_ideals(r, limits)) {
    const bool proper = is_proper(r, i);
    const bool prime = is_prime(r, i);
    const bool maximal = is_maximal(r, i);
    const bool ta = proper && ta_check(r, i, limits).is_ta;
    if ((filter.ta_only && !ta) || (filter.prime_only && !prime) || (filter.maximal_only && !maximal)) continue;
    Json entry = ideal_json(p, i);
    entry["prime"] = prime;
    entry["maximal"] = maximal;
    entry["ta"] = ta;
    list.push_back(entry);
  }
  const size_t count = list.size();
  return finish(make_report("ideals", input, count, {{"kind", "ideal-list"}, {"ideals", list}}), t0);
}

Json cmd_quad(const std::string& action, int64_t d, const std::string& ideal, bool maximal, bool shortest,
              const Limits& limits) {
  const auto t0 = Clock::now();
  if (action == "classify") {
    const QuadClassification c = classify_quadratic_order(d);
    return finish(make_report("quad classify", {{"d", d}}, to_string(c.verdict), classification_json(c)), t0);
  }
  if (action != "ta" && action != "factor") throw InputError("unknown quad action '" + action + "'");
  const QuadOrder D(d, maximal ? QuadBasis::Half : QuadBasis::Sqrt);
  if (ideal.empty()) throw InputError("quad " + action + " needs --ideal");
  const QuadIdeal i = ideal_from_gens(D, parse_quad_elements(ideal));
  Json input = {{"d", d},
                {"basis", maximal ? "half" : "sqrt"},
                {"ideal", ideal},
                {"guard", limits.enumeration_guard}};
  if (action == "ta") {
    const QuadTAResult r = ta_check_quad(D, i, limits);
    Json cert;
    if (r.witness) {
      cert = {{"kind", "quad-ta-witness"},
              {"ideal", quad_ideal_json(i)},
              {"a", format(r.witness->a)},
              {"b", format(r.witness->b)},
              {"c", format(r.witness->c)}};
    } else {
      cert = {{"kind", "quad-ta-exhaustive"}, {"ideal", quad_ideal_json(i)}, {"quotient_order", ideal_norm(i)}};
    }
    return finish(make_report("quad ta", input, r.is_ta, cert), t0);
  }
  input["shortest"] = shortest;
  const auto f = ta_factorization_quad(D, i, limits, shortest);
  Json cert;
  if (f) {
    Json factors = Json::array();
    for (const auto& j : f->factors) factors.push_back(quad_ideal_json(j));
    cert = {{"kind", "quad-factorization"}, {"target", quad_ideal_json(i)}, {"factors", factors}};
  } else {
    cert = {{"kind", "quad-exhausted-search"},
            {"ideal", quad_ideal_json(i)},
            {"quotient_order", ideal_norm(i)},
            {"lattice_size", ideals_above_quad(D, i, limits).size()}};
  }
  return finish(make_report("quad factor", input, f.has_value(), cert), t0);
}

Json cmd_classify_range(int64_t d_min, int64_t d_max) {
  const auto t0 = Clock::now();
  if (d_min > d_max) throw InputError("--d-min must not exceed --d-max");
  if (d_max - d_min > 1'000'000) throw InputError("range too large (at most 10^6 values)");
  std::vector<int64_t> ds;
  for (int64_t d = d_min; d <= d_max; ++d)
    if (d != 0 && d != 1 && mod_floor(d, 4) == 1 && is_squarefree(d)) ds.push_back(d);

  std::vector<std::optional<QuadClassification>> results(ds.size());
  std::vector<std::string> errors(ds.size());
  (void)non_taf_target();  // build shared state before the workers start
#pragma omp parallel for schedule(dynamic, 4)
  for (int64_t k = 0; k < int64_t(ds.size()); ++k) {
    try {
      results[size_t(k)] = classify_quadratic_order(ds[size_t(k)]);
    } catch (const std::exception& e) {
      errors[size_t(k)] = e.what();
    }
  }
  Json rows = Json::array();
  bool consistent = true;
  for (size_t k = 0; k < ds.size(); ++k) {
    if (!results[k]) throw std::runtime_error("classification of d = " + std::to_string(ds[k]) + ": " + errors[k]);
    const auto& c = *results[k];
    const bool expect_taf = mod_floor(ds[k], 8) == 5;
    consistent = consistent && (c.verdict == QuadVerdict::TAF) == expect_taf;
    rows.push_back({{"d", ds[k]},
                    {"d_mod_8", mod_floor(ds[k], 8)},
                    {"verdict", to_string(c.verdict)},
                    {"certificate_kind", classification_kind(c)}});
  }
  return finish(make_report("classify-range", {{"d_min", d_min}, {"d_max", d_max}}, consistent,
                            {{"kind", "classification-table"}, {"rows", rows}}),
                t0);
}

Json cmd_selftest(const Limits& limits, bool inject_corruption) {
  const auto t0 = Clock::now();
  const auto results = run_acceptance({limits, inject_corruption});
  Json criteria = Json::array();
  bool pass = true;
  bool skipped = false;
  for (const auto& r : results) {
    pass = pass && r.status != CriterionStatus::Fail;
    skipped = skipped || r.status == CriterionStatus::Skip;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"status", to_string(r.status)},
                        {"detail", r.detail},
                        {"elapsed_ms", r.elapsed_ms},
                        {"limit_ms", r.limit_ms}});
  }
  Json report = make_report("selftest", {{"guard", limits.enumeration_guard}, {"inject_corruption", inject_corruption}},
                            pass, {{"kind", "acceptance"}, {"criteria", criteria}});
  if (skipped) report["limits_hit"].push_back("enumeration_guard");
  return finish(report, t0);
}

int exit_code_for(const Json& report) {
  return report.value("command", "") == "selftest" && report["verdict"] == false ? 1 : 0;
}

}  // namespace taf
