#pragma once

// Command implementations behind the `taf` executable. Each returns a report
// (see report.hpp) and throws InputError / LimitExceeded for exit-code-2 cases.

#include <cstdint>
#include <string>

#include "taf/finite_ring.hpp"
#include "taf/report.hpp"

namespace taf {

struct IdealFilter {
  bool ta_only = false;
  bool prime_only = false;
  bool maximal_only = false;
};

Json cmd_check_ta(const std::string& ring, const std::string& ideal, const Limits& limits = {});
Json cmd_factor(const std::string& ring, const std::string& ideal, bool shortest, const Limits& limits = {});
Json cmd_check_taf(const std::string& ring, const Limits& limits = {});
Json cmd_ideals(const std::string& ring, const IdealFilter& filter, const Limits& limits = {});

/// action is "ta", "factor" or "classify"; `maximal` selects the half basis.
Json cmd_quad(const std::string& action, int64_t d, const std::string& ideal, bool maximal, bool shortest,
              const Limits& limits = {});
Json cmd_classify_range(int64_t d_min, int64_t d_max);

/// Runs the acceptance suite. `inject_corruption` swaps in a ring table with
/// a broken associativity law, as a negative control.
Json cmd_selftest(const Limits& limits = {}, bool inject_corruption = false);

/// Exit status for a computed report: 1 only for a failed selftest.
int exit_code_for(const Json& report);

}  // namespace taf
