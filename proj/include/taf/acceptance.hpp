#pragma once

// The acceptance suite: the worked computations and property sweeps that a
// build must reproduce. Shared by the acceptance test binary and `taf selftest`.

#include <string>
#include <vector>

#include "taf/finite_ring.hpp"

namespace taf {

enum class CriterionStatus { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::Fail;
  std::string detail;
  double elapsed_ms = 0;
  double limit_ms = 0;  // 0 means no runtime bound
};

struct AcceptanceOptions {
  Limits limits;
  bool inject_corruption = false;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// The ten-ring corpus used by the product, oracle and structure sweeps.
const std::vector<std::string>& acceptance_corpus();

/// Every ideal of r that is a product of proper TA-ideals, by closing the set
/// of proper TA-ideals under multiplication up to `max_length` factors.
std::vector<FinIdeal> factorable_by_closure(const FiniteRing& r, size_t max_length, const Limits& limits = {});

const char* to_string(CriterionStatus s);

/// "[PASS] 3 cubic quotient check (12.0 ms / 5000 ms): detail"
std::string format_line(const CriterionResult& r);

}  // namespace taf
