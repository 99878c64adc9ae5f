#pragma once

// JSON encodings of ideals and certificates, in both directions, so that a
// report written by one command can be re-checked after loading.

#include <string>
#include <vector>

#include "taf/factorize.hpp"
#include "taf/presentation.hpp"
#include "taf/quadratic.hpp"
#include "taf/report.hpp"

namespace taf {

/// Comma-separated generators ("2, x"); "0" or "" give the zero ideal.
FinIdeal parse_ideal(const PresentedRing& p, const std::string& text);

/// {"gens": [...], "size": n}
Json ideal_json(const PresentedRing& p, const FinIdeal& i);
FinIdeal ideal_from_json(const PresentedRing& p, const Json& j);
Json factors_json(const PresentedRing& p, const std::vector<FinIdeal>& factors);

Json non_taf_json(const PresentedRing& p, const NonTAFCertificate& c);
NonTAFCertificate non_taf_from_json(const PresentedRing& p, const Json& j);

/// {"hnf": [[a, b], [0, c]], "gens": "(a, b + c*w)", "norm": a*c}
Json quad_ideal_json(const QuadIdeal& i);
QuadIdeal quad_ideal_from_json(const Json& j);

Json classification_json(const QuadClassification& c);
/// "residue-field" or "epimorphism"
const char* classification_kind(const QuadClassification& c);

}  // namespace taf
