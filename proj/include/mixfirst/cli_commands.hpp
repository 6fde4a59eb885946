// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mixfirst/run_config.hpp"

namespace mixfirst {

// Exit codes shared by the command layer and the binary.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 1;
inline constexpr int exit_validation_failure = 2;

// Each command writes its primary output (CSV or key = value report) to the
// path in c.out_path, or to fallback_out when that is empty. Errors escape as
// exceptions; main() maps them to exit codes.
int cmd_sweep(const run_config& c, std::ostream& fallback_out);

int cmd_gm_ladder(const run_config& c, const std::vector<double>& gm_list,
                  std::ostream& fallback_out);

int cmd_tune(const run_config& c, std::ostream& fallback_out);

int cmd_trim(const run_config& c, std::ostream& fallback_out);

// PASS/WARN/FAIL lines; returns exit_validation_failure when any line FAILs.
int cmd_validate(const run_config& c, std::ostream& fallback_out);

// Measures Z_in with the time-domain simulator and compares it against the
// analytic model; optionally dumps the raw time series as CSV.
int cmd_oracle(const run_config& c,
               const std::optional<std::string>& dump_ts_path,
               std::ostream& fallback_out);

}  // namespace mixfirst
