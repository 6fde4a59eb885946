// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>

#include "mixfirst/mixer_lti.hpp"

namespace mixfirst {

// Small-signal regulated cascode: common-gate input device (gm1, ro1) loaded
// by rl || cl, with a common-source gain stage (gm2, ro2, drain resistor
// r_fb) regulating its gate.
struct rgc_params {
  double gm1_s = 5e-3;
  double gm2_s = 5e-3;
  double ro1_ohm = 10e3;
  double ro2_ohm = 10e3;
  double rl_ohm = 1e3;
  double cl_f = 1e-12;
  double r_fb_ohm = 10e3;
  // Unity buffer between the output node and cl. Keeps the load capacitance
  // out of the input-impedance numerator, pushing its shelf out of band.
  bool ideal_buffer = false;
  // Baseband shunt capacitor at the TIA input; required by the
  // tia_baseband_impedance / compose_complex_tia compositions.
  std::optional<double> c_bb_f;

  friend bool operator==(const rgc_params&, const rgc_params&) = default;
};

// Throws std::invalid_argument when a conductance/resistance is not positive
// or cl is negative.
void validate(const rgc_params& p);

// Loop gain of the regulation stage: gm2 * (ro2 || r_fb).
double regulation_loop_gain(const rgc_params& p);

// R_in = ((rl || 1/jwCl) + ro1) / (1 + ro1*gm1*(loop_gain + 1)), f >= 0.
std::complex<double> rgc_input_impedance(const rgc_params& p, double f_hz);

// rgc_input_impedance in parallel with c_bb. Throws missing_cbb when the
// capacitor is not configured.
std::complex<double> tia_baseband_impedance(const rgc_params& p, double f_hz);

// Signed-offset wrapper around tia_baseband_impedance using hermitian
// symmetry z(-f) = conj(z(f)) of the real network.
baseband_impedance make_tia_baseband(const rgc_params& p);

// Quadrature gm stage wrapped around the TIA baseband load:
// z(f) = Z_bb(f) / (1 + j*gm*Z_bb(f)), f signed. Same orientation as zc_at:
// the response center lands at negative offsets.
baseband_impedance compose_complex_tia(const rgc_params& p, double gm_s);

}  // namespace mixfirst
