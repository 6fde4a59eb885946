// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mixfirst/mixer_lti.hpp"

namespace mixfirst {

// Per-branch baseband network behind each mixer switch. All four branches are
// identical; the optional gm is an ideal VCCS cross-coupling the I pair
// (branches 0/2) and the Q pair (branches 1/3). Positive gm shifts the
// translated response above the LO, matching the analytic convention.
struct branch_load {
  double r_ohm = 274.6;  // 0 shorts the branch, +inf leaves only the capacitor
  double c_f = 55e-12;   // 0 removes the capacitor
  double gm_s = 0.0;     // signed quadrature coupling
};

// Topology degeneracies used by the self-checks.
enum class sim_topology {
  four_phase,       // the real thing: 4 switches, 25% duty each
  single_switch_on  // switch 0 permanently closed, branches 1..3 disconnected
};

// One brute-force run: sine source of amplitude_v at f_rf behind the antenna
// resistance, switched into the branch loads at f_lo. Durations are counted
// in beat periods (1/|f_rf - f_lo|); when f_rf == f_lo one "beat period"
// stands for 100 LO periods.
struct sim_scenario {
  mixer_config cfg;
  branch_load load;
  double amplitude_v = 1e-3;
  double f_rf_hz = 1.01e9;
  double dt_s = 0.0;  // 0 means 1/(64*f_lo); must satisfy dt <= 1/(64*f_lo)
  int settle_periods = 20;
  int measure_periods = 10;
  sim_topology topology = sim_topology::four_phase;

  double beat_hz() const;
};

// Node indices in trace arrays: RF node then the four baseband nodes.
inline constexpr int node_rf = 0;
inline constexpr int node_bb0 = 1;

// Time-averaged power bookkeeping over the measurement span. For purely
// resistive loads source and dissipated power balance to rounding error;
// capacitors average to ~0 in steady state and the gm stage may move power
// between branches.
struct power_report {
  double source_avg_w = 0.0;
  double dissipated_avg_w = 0.0;  // ra + conducting switch + branch resistors
  double cap_avg_w = 0.0;
  double gm_avg_w = 0.0;
};

struct sim_trace {
  double dt_s = 0.0;  // effective step after snapping to the LO grid
  std::vector<double> t_s;
  std::vector<std::array<double, 5>> v;  // node voltages per sample
  std::vector<double> i_source_a;        // current out of the source
  power_report power;
};

struct measured_impedance {
  std::complex<double> z_ohm;       // from the last measurement window
  std::complex<double> z_prev_ohm;  // from the window before it
  double window_rel_delta;          // |z - z_prev| / |z|
  double f_rf_hz;
  double dt_s;
};

struct spectrum_line {
  double f_hz;  // f_rf + k*f_lo, signed
  std::complex<double> amplitude_v;
  int sideband_k;
};

// Which switch conducts at time t (0..3). Exactly one does at every instant.
int conducting_switch(const mixer_config& cfg, double t_s);

// Integrates settle + measure beat periods and returns the full time series.
// Trapezoidal companion models, steps snapped so switch edges land exactly on
// the grid. Throws step_too_large when dt violates the sampling bound.
sim_trace simulate(const sim_scenario& s);

// Z_in(f_rf) = V_rf(f_rf) / I_source(f_rf) by single-bin DFT over the last
// measurement window. Runs two consecutive windows and throws not_settled
// when they disagree by more than 1%.
measured_impedance measure_input_impedance(const sim_scenario& s);

// Single-bin DFT of one node voltage at the translation lines
// f_rf + k*f_lo, k in [-3, 3], over one measurement window.
std::vector<spectrum_line> sideband_spectrum(const sim_scenario& s, int node);

}  // namespace mixfirst
