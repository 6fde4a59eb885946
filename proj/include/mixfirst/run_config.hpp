// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mixfirst/matching.hpp"
#include "mixfirst/mixer_lti.hpp"
#include "mixfirst/oracle_sim.hpp"
#include "mixfirst/tia_rgc.hpp"

namespace mixfirst {

// What sits behind each mixer switch in the analytic composition.
enum class baseband_kind { plain_r, plain_rc, complex_rc, complex_tia };

// Everything a CLI run needs, parsed from a flat sectioned key = value file
// with SI suffixes (55pF, 3.46mS, 1GHz, ...). Defaults reproduce the stock
// receiver: 50 ohm antenna, 5 ohm switches, 1 GHz LO, 274.6 ohm || 55 pF
// branch loads.
struct run_config {
  // [mixer]
  double ra_ohm = 50.0;
  double rsw_ohm = 5.0;
  double f_lo_hz = 1e9;

  // [baseband]
  baseband_kind kind = baseband_kind::complex_rc;
  double r_bb_ohm = 274.6;
  double c_bb_f = 55e-12;
  double gm_s = 0.0;
  std::optional<double> gm_bandwidth_hz;
  shift_sign shift = shift_sign::up;

  // [tia] (used when kind = complex_tia; c_bb above supplies the shunt cap)
  rgc_params tia;

  // [sweep]
  double f_start_hz = 0.95e9;
  double f_stop_hz = 1.05e9;
  int n_points = 1001;

  // [sim]
  double amplitude_v = 1e-3;
  double f_rf_hz = 1.01e9;
  double dt_s = 0.0;  // 0 means the coarsest legal step, 1/(64*f_lo)
  int settle_periods = 20;
  int measure_periods = 10;

  // [bank]
  double unit_rsw_ohm = 20.0;
  int n_units = 4;

  // [tune]
  double target_f_hz = 1.01e9;

  // [output]
  std::string out_path;  // empty writes to stdout

  bool operator==(const run_config&) const = default;
};

// Parses config text. Unknown sections or keys, malformed lines, and
// unparsable values all throw config_error naming the offending line.
run_config parse_config(std::string_view text);

// Reads and parses a file; throws config_error when unreadable.
run_config load_config_file(const std::string& path);

// Canonical text form: fixed section/key order, round-trip-exact numbers.
// parse_config(serialize_config(c)) == c.
std::string serialize_config(const run_config& c);

mixer_config make_mixer(const run_config& c);

// Analytic receiver for the configured baseband kind.
receiver_model build_receiver(const run_config& c);

// Time-domain scenario equivalent to the configured receiver. The TIA kind
// maps to an R-C-gm branch with r equal to the TIA's DC input resistance,
// since the simulator hosts RC/R-C-gm branches only.
sim_scenario build_scenario(const run_config& c);

}  // namespace mixfirst
