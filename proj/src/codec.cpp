#include "taf/codec.hpp"

#include "taf/checked.hpp"

namespace taf {

FinIdeal parse_ideal(const PresentedRing& p, const std::string& text) {
  const auto gens = p.parse_elements(text);
  return ideal_generate(p.ring(), std::span<const Elem>(gens));
}

Json ideal_json(const PresentedRing& p, const FinIdeal& i) {
  Json gens = Json::array();
  for (Elem g : i.gens()) gens.push_back(p.format(g));
  return {{"gens", gens}, {"size", i.size()}};
}

FinIdeal ideal_from_json(const PresentedRing& p, const Json& j) {
  std::vector<Elem> gens;
  for (const auto& g : j.at("gens")) gens.push_back(p.parse_element(g.get<std::string>()));
  FinIdeal i = ideal_generate(p.ring(), std::span<const Elem>(gens));
  if (j.contains("size") && j["size"].get<size_t>() != i.size())
    throw InputError("ideal size does not match its generators");
  return i;
}

Json factors_json(const PresentedRing& p, const std::vector<FinIdeal>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(ideal_json(p, f));
  return out;
}

Json non_taf_json(const PresentedRing& p, const NonTAFCertificate& c) {
  Json j = {{"kind", to_string(c.kind)}, {"ideal", ideal_json(p, c.ideal)}};
  if (c.kind == NonTAFKind::IncomparableWithSquare) {
    j["maximal"] = ideal_json(p, *c.maximal);
    j["maximal_square"] = ideal_json(p, *c.maximal_square);
    j["in_ideal_not_square"] = p.format(*c.in_ideal_not_square);
    j["in_square_not_ideal"] = p.format(*c.in_square_not_ideal);
  }
  return j;
}

NonTAFCertificate non_taf_from_json(const PresentedRing& p, const Json& j) {
  NonTAFCertificate c;
  const auto kind = j.at("kind").get<std::string>();
  c.ideal = ideal_from_json(p, j.at("ideal"));
  if (kind == to_string(NonTAFKind::ExhaustedSearch)) {
    c.kind = NonTAFKind::ExhaustedSearch;
    return c;
  }
  if (kind != to_string(NonTAFKind::IncomparableWithSquare)) throw InputError("unknown certificate kind " + kind);
  c.kind = NonTAFKind::IncomparableWithSquare;
  c.maximal = ideal_from_json(p, j.at("maximal"));
  c.maximal_square = ideal_from_json(p, j.at("maximal_square"));
  c.in_ideal_not_square = p.parse_element(j.at("in_ideal_not_square").get<std::string>());
  c.in_square_not_ideal = p.parse_element(j.at("in_square_not_ideal").get<std::string>());
  return c;
}

Json quad_ideal_json(const QuadIdeal& i) {
  return {{"hnf", {{i.a, i.b}, {0, i.c}}}, {"gens", format(i)}, {"norm", ideal_norm(i)}};
}

QuadIdeal quad_ideal_from_json(const Json& j) {
  const auto& h = j.at("hnf");
  QuadIdeal i{h.at(0).at(0).get<int64_t>(), h.at(0).at(1).get<int64_t>(), h.at(1).at(1).get<int64_t>()};
  if (h.at(1).at(0).get<int64_t>() != 0 || i.a < 1 || i.c < 1 || i.b < 0 || i.b >= i.a || i.a % i.c != 0 ||
      i.b % i.c != 0)
    throw InputError("malformed ideal HNF");
  return i;
}

const char* classification_kind(const QuadClassification& c) {
  return c.verdict == QuadVerdict::TAF ? "residue-field" : "epimorphism";
}

Json classification_json(const QuadClassification& c) {
  Json j = {{"kind", classification_kind(c)}, {"d", c.d}};
  if (c.verdict == QuadVerdict::TAF) {
    j["residue_constant"] = c.residue_constant;
    j["polynomial"] = "X^2 + X + " + std::to_string(mod_floor(c.residue_constant, 2)) + " over Z/2";
    j["maximal_ideal"] = "(2, 1 + sqrt d) in Z[(1 + sqrt d)/2]";
    j["field_by_polynomial"] = c.field_by_polynomial;
    j["field_by_quotient"] = c.field_by_quotient;
    return j;
  }
  const PresentedRing t(parse_ringspec("Z/8[x]/(x^2, 2x)"));
  j["target_ring"] = "Z/8[x]/(x^2, 2x)";
  j["image_of_sqrt_d"] = "x + 1";
  j["well_defined"] = c.homomorphism_well_defined;
  j["surjective"] = c.homomorphism_surjective;
  j["target_certificate"] = non_taf_json(t, *c.target_certificate);
  return j;
}

}  // namespace taf
