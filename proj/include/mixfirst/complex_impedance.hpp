// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>

#include "mixfirst/mixer_lti.hpp"

namespace mixfirst {

// Quadrature baseband signal sample (I, Q) at one frequency.
struct complex_signal_pair {
  double i = 0.0;
  double q = 0.0;
};

// R_bb || C_bb load with an ideal quadrature gm stage across it. The gm
// coupling turns the symmetric low-pass into a frequency-shifted one-sided
// response; the shift magnitude is gm/(2*pi*C_bb).
class complex_impedance_spec {
 public:
  complex_impedance_spec(double r_bb_ohm, double c_bb_f, double gm_s);
  complex_impedance_spec(double r_bb_ohm, double c_bb_f, double gm_s,
                         double gm_bandwidth_hz);

  double r_bb_ohm() const { return r_bb_ohm_; }
  double c_bb_f() const { return c_bb_f_; }
  double gm_s() const { return gm_s_; }
  std::optional<double> gm_bandwidth_hz() const { return gm_bandwidth_hz_; }

  double offset_rad_s() const { return gm_s_ / c_bb_f_; }
  double offset_hz() const;  // gm/(2*pi*C_bb)

  complex_impedance_spec with_gm(double gm_s) const;

 private:
  double r_bb_ohm_;
  double c_bb_f_;
  double gm_s_;
  std::optional<double> gm_bandwidth_hz_;
};

// Z_c(f) = R / (1 + j*R*C*(2*pi*f + gm/C)), f signed. Peaks (purely real,
// equal to R) at f = -gm/(2*pi*C); the mirror orientation is the caller's
// business (see matching.hpp).
std::complex<double> zc_at(const complex_impedance_spec& spec, double f_hz);

// V = I * Z_bb / (1 + j*gm*Z_bb) evaluated at signed baseband frequency f.
// Throws division_degenerate when the denominator vanishes (needs an active
// z_bb; impossible for passive networks).
complex_signal_pair response_voltage(const baseband_impedance& z_bb,
                                     double gm_s, const complex_signal_pair& i,
                                     double f_hz);

enum class check_status { pass, warn };

struct gm_bandwidth_report {
  check_status status;
  double f_oc_hz;         // center-frequency shift produced by gm
  double bandwidth_hz;    // +inf when the spec leaves it unspecified
  double required_min_hz; // 10 * f_oc
};

// The ideal-gm abstraction needs the stage bandwidth to comfortably exceed
// the shift it produces; warns below 10x. An unspecified bandwidth means the
// stage is taken as ideal and passes.
gm_bandwidth_report check_gm_bandwidth(const complex_impedance_spec& spec);

}  // namespace mixfirst
