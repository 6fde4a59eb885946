// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/complex_impedance.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mixfirst/errors.hpp"

namespace mixfirst {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

complex_impedance_spec::complex_impedance_spec(double r_bb_ohm, double c_bb_f,
                                               double gm_s)
    : r_bb_ohm_(r_bb_ohm), c_bb_f_(c_bb_f), gm_s_(gm_s) {
  if (!(r_bb_ohm > 0.0))
    throw std::invalid_argument("complex_impedance_spec: r_bb_ohm must be > 0");
  if (!(c_bb_f > 0.0))
    throw std::invalid_argument("complex_impedance_spec: c_bb_f must be > 0");
  if (!(gm_s >= 0.0))
    throw std::invalid_argument("complex_impedance_spec: gm_s must be >= 0");
}

complex_impedance_spec::complex_impedance_spec(double r_bb_ohm, double c_bb_f,
                                               double gm_s,
                                               double gm_bandwidth_hz)
    : complex_impedance_spec(r_bb_ohm, c_bb_f, gm_s) {
  if (!(gm_bandwidth_hz > 0.0))
    throw std::invalid_argument(
        "complex_impedance_spec: gm_bandwidth_hz must be > 0");
  gm_bandwidth_hz_ = gm_bandwidth_hz;
}

double complex_impedance_spec::offset_hz() const {
  return offset_rad_s() / two_pi;
}

complex_impedance_spec complex_impedance_spec::with_gm(double gm_s) const {
  if (gm_bandwidth_hz_)
    return complex_impedance_spec(r_bb_ohm_, c_bb_f_, gm_s, *gm_bandwidth_hz_);
  return complex_impedance_spec(r_bb_ohm_, c_bb_f_, gm_s);
}

std::complex<double> zc_at(const complex_impedance_spec& spec, double f_hz) {
  const double w = two_pi * f_hz;
  const double x = spec.r_bb_ohm() * spec.c_bb_f() * (w + spec.offset_rad_s());
  return spec.r_bb_ohm() / std::complex<double>(1.0, x);
}

complex_signal_pair response_voltage(const baseband_impedance& z_bb,
                                     double gm_s, const complex_signal_pair& i,
                                     double f_hz) {
  const std::complex<double> zb = z_bb(f_hz);
  const std::complex<double> den =
      1.0 + std::complex<double>(0.0, gm_s) * zb;
  if (std::abs(den) < 1e-12 * (1.0 + std::abs(gm_s * zb)))
    throw division_degenerate(
        "response_voltage: 1 + j*gm*Z_bb vanished (active baseband?)");
  const std::complex<double> v = std::complex<double>(i.i, i.q) * zb / den;
  return {v.real(), v.imag()};
}

gm_bandwidth_report check_gm_bandwidth(const complex_impedance_spec& spec) {
  const double f_oc = spec.offset_hz();
  const double bw = spec.gm_bandwidth_hz()
                        ? *spec.gm_bandwidth_hz()
                        : std::numeric_limits<double>::infinity();
  const double required = 10.0 * f_oc;
  return {bw < required ? check_status::warn : check_status::pass, f_oc, bw,
          required};
}

}  // namespace mixfirst
