// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>

#include "mixfirst/frequency_response.hpp"

namespace mixfirst {

// Fraction of the baseband impedance visible at RF for a 4-phase 25%-duty
// passive mixer: 4 * |a1|^2 with a1 the fundamental Fourier coefficient of a
// quarter-duty switching waveform.
inline constexpr double mixer_gamma = 0.20264236728467554;  // 2/pi^2

// Baseband impedance as a function of *signed* offset from the LO in Hz.
// Real (non-quadrature) networks must satisfy z(-f) == conj(z(f)).
using baseband_impedance = std::function<std::complex<double>(double)>;

// 4-phase 25%-duty passive mixer driven from an antenna resistance.
// Phase count and duty other than 4 / 0.25 are rejected: the gamma and
// shunt-resistance constants below are specific to that clocking.
class mixer_config {
 public:
  mixer_config() = default;
  mixer_config(double ra_ohm, double rsw_ohm, double f_lo_hz);
  mixer_config(double ra_ohm, double rsw_ohm, double f_lo_hz, int n_phases,
               double duty);

  double ra_ohm() const { return ra_ohm_; }
  double rsw_ohm() const { return rsw_ohm_; }
  double f_lo_hz() const { return f_lo_hz_; }
  int n_phases() const { return 4; }
  double duty() const { return 0.25; }

  mixer_config with_rsw(double rsw_ohm) const;

 private:
  double ra_ohm_ = 50.0;
  double rsw_ohm_ = 5.0;
  double f_lo_hz_ = 1e9;
};

// Frequency-independent part of the translated model.
struct lti_equivalent {
  double ra_prime_ohm;  // ra + rsw
  double gamma;         // 2/pi^2
  double rsh_ohm;       // ra' * 4*gamma / (1 - 4*gamma), about 4.28 * ra'
};

lti_equivalent derive_lti(const mixer_config& cfg);

struct translated_impedance {
  std::complex<double> z_ohm;
  bool in_validity_window;
};

bool in_validity_window(const mixer_config& cfg, double f_hz);

// Z_in(f) = rsw + rsh || (gamma * z_bb(f - f_lo)). Always evaluates; the
// window flag reports whether the single-sideband assumption holds at f.
translated_impedance translated_input_impedance(const mixer_config& cfg,
                                                const baseband_impedance& z_bb,
                                                double f_hz);

// Same value, but throws out_of_validity_window when |f - f_lo| >= f_lo/2.
std::complex<double> input_impedance(const mixer_config& cfg,
                                     const baseband_impedance& z_bb,
                                     double f_hz);

// Uniform grid of n_points from f_start to f_stop inclusive. Out-of-window or
// non-finite baseband evaluations become flagged points, never exceptions.
// Points are evaluated concurrently but assembled in grid order, so z_bb must
// be safe to call from several threads at once (every built-in composition is).
frequency_response impedance_sweep(const mixer_config& cfg,
                                   const baseband_impedance& z_bb,
                                   double f_start_hz, double f_stop_hz,
                                   int n_points);

}  // namespace mixfirst
