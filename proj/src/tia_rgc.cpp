// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/tia_rgc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mixfirst/errors.hpp"

namespace mixfirst {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> parallel(std::complex<double> a, std::complex<double> b) {
  return a * b / (a + b);
}
}  // namespace

void validate(const rgc_params& p) {
  if (!(p.gm1_s > 0.0) || !(p.gm2_s > 0.0))
    throw std::invalid_argument("rgc_params: transconductances must be > 0");
  if (!(p.ro1_ohm > 0.0) || !(p.ro2_ohm > 0.0) || !(p.rl_ohm > 0.0) ||
      !(p.r_fb_ohm > 0.0))
    throw std::invalid_argument("rgc_params: resistances must be > 0");
  if (!(p.cl_f >= 0.0))
    throw std::invalid_argument("rgc_params: cl_f must be >= 0");
  if (p.c_bb_f && !(*p.c_bb_f > 0.0))
    throw std::invalid_argument("rgc_params: c_bb_f must be > 0 when present");
}

double regulation_loop_gain(const rgc_params& p) {
  return p.gm2_s * (p.ro2_ohm * p.r_fb_ohm / (p.ro2_ohm + p.r_fb_ohm));
}

std::complex<double> rgc_input_impedance(const rgc_params& p, double f_hz) {
  validate(p);
  if (!(f_hz >= 0.0))
    throw std::invalid_argument("rgc_input_impedance: f_hz must be >= 0");
  const double w = two_pi * f_hz;
  std::complex<double> zl(p.rl_ohm, 0.0);
  if (!p.ideal_buffer && p.cl_f > 0.0 && w > 0.0)
    zl = parallel(zl, 1.0 / std::complex<double>(0.0, w * p.cl_f));
  const double denom = 1.0 + p.ro1_ohm * p.gm1_s * (regulation_loop_gain(p) + 1.0);
  return (zl + p.ro1_ohm) / denom;
}

std::complex<double> tia_baseband_impedance(const rgc_params& p, double f_hz) {
  if (!p.c_bb_f)
    throw missing_cbb("tia_baseband_impedance: rgc_params.c_bb_f not set");
  const std::complex<double> zin = rgc_input_impedance(p, f_hz);
  const double w = two_pi * f_hz;
  if (w <= 0.0) return zin;  // capacitor is open at dc
  return parallel(zin, 1.0 / std::complex<double>(0.0, w * *p.c_bb_f));
}

baseband_impedance make_tia_baseband(const rgc_params& p) {
  if (!p.c_bb_f)
    throw missing_cbb("make_tia_baseband: rgc_params.c_bb_f not set");
  validate(p);
  return [p](double f_hz) {
    const std::complex<double> z = tia_baseband_impedance(p, std::abs(f_hz));
    return f_hz < 0.0 ? std::conj(z) : z;
  };
}

baseband_impedance compose_complex_tia(const rgc_params& p, double gm_s) {
  if (!(gm_s >= 0.0))
    throw std::invalid_argument("compose_complex_tia: gm_s must be >= 0");
  baseband_impedance zbb = make_tia_baseband(p);
  return [zbb, gm_s](double f_hz) {
    const std::complex<double> z = zbb(f_hz);
    const std::complex<double> den = 1.0 + std::complex<double>(0.0, gm_s) * z;
    if (std::abs(den) < 1e-12 * (1.0 + std::abs(gm_s * z)))
      throw division_degenerate("compose_complex_tia: 1 + j*gm*Z_bb vanished");
    return z / den;
  };
}

}  // namespace mixfirst
