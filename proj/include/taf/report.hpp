#pragma once

// Versioned JSON reports shared by every command, their text rendering, a
// structural validator, and load-time re-verification of certificates.

#include <string>
#include <vector>

#include <json.hpp>

namespace taf {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// {"schema", "command", "input", "verdict", "certificate", "timing_ms", "limits_hit"}
Json make_report(const std::string& command, Json input, Json verdict, Json certificate);

/// Structural problems with a report; empty when it conforms. Checks required
/// keys and types, the certificate kind against the known union, the fields
/// each kind requires, and that a false verdict carries a certificate.
std::vector<std::string> validate_report(const Json& report);

/// Re-checks the mathematical content of the certificate from the echoed
/// input: factorizations are re-multiplied, witnesses re-evaluated, and
/// audits re-run. Returns problems found; empty means verified.
std::vector<std::string> verify_report(const Json& report);

/// One "path: value" line per leaf, in document order. Text mode prints
/// exactly these lines, so text and JSON carry the same content.
std::vector<std::pair<std::string, std::string>> flatten(const Json& report);
std::string render_text(const Json& report);

/// {"schema", "command", "error": {"type": "input" | "limit" | "overflow", "message"}}
Json make_error(const std::string& command, const std::string& type, const std::string& message);

}  // namespace taf
