// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/mixer_lti.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mixfirst/errors.hpp"

namespace mixfirst {

namespace {

void check_common(double ra_ohm, double rsw_ohm, double f_lo_hz) {
  if (!(ra_ohm > 0.0))
    throw std::invalid_argument("mixer_config: ra_ohm must be > 0");
  if (!(rsw_ohm >= 0.0))
    throw std::invalid_argument("mixer_config: rsw_ohm must be >= 0");
  if (!(f_lo_hz > 0.0))
    throw std::invalid_argument("mixer_config: f_lo_hz must be > 0");
}

}  // namespace

mixer_config::mixer_config(double ra_ohm, double rsw_ohm, double f_lo_hz)
    : ra_ohm_(ra_ohm), rsw_ohm_(rsw_ohm), f_lo_hz_(f_lo_hz) {
  check_common(ra_ohm, rsw_ohm, f_lo_hz);
}

mixer_config::mixer_config(double ra_ohm, double rsw_ohm, double f_lo_hz,
                           int n_phases, double duty)
    : mixer_config(ra_ohm, rsw_ohm, f_lo_hz) {
  if (n_phases != 4)
    throw std::invalid_argument("mixer_config: only 4-phase clocking is modeled");
  if (std::abs(duty - 0.25) > 1e-12)
    throw std::invalid_argument("mixer_config: only 25% duty is modeled");
}

mixer_config mixer_config::with_rsw(double rsw_ohm) const {
  return mixer_config(ra_ohm_, rsw_ohm, f_lo_hz_);
}

lti_equivalent derive_lti(const mixer_config& cfg) {
  const double ra_prime = cfg.ra_ohm() + cfg.rsw_ohm();
  const double g4 = 4.0 * mixer_gamma;
  return {ra_prime, mixer_gamma, ra_prime * g4 / (1.0 - g4)};
}

bool in_validity_window(const mixer_config& cfg, double f_hz) {
  return std::abs(f_hz - cfg.f_lo_hz()) < 0.5 * cfg.f_lo_hz();
}

translated_impedance translated_input_impedance(const mixer_config& cfg,
                                                const baseband_impedance& z_bb,
                                                double f_hz) {
  if (!(f_hz > 0.0))
    throw std::invalid_argument("input_impedance: f_hz must be > 0");
  const lti_equivalent lti = derive_lti(cfg);
  const std::complex<double> zb = z_bb(f_hz - cfg.f_lo_hz());
  const std::complex<double> scaled = lti.gamma * zb;
  // rsh || (gamma*zb); series form avoids dividing by zero when zb == 0.
  const std::complex<double> shunt =
      lti.rsh_ohm * scaled / (lti.rsh_ohm + scaled);
  return {cfg.rsw_ohm() + shunt, in_validity_window(cfg, f_hz)};
}

std::complex<double> input_impedance(const mixer_config& cfg,
                                     const baseband_impedance& z_bb,
                                     double f_hz) {
  const translated_impedance r = translated_input_impedance(cfg, z_bb, f_hz);
  if (!r.in_validity_window)
    throw out_of_validity_window(
        "input_impedance: f = " + std::to_string(f_hz) +
        " Hz is outside |f - f_lo| < f_lo/2");
  return r.z_ohm;
}

frequency_response impedance_sweep(const mixer_config& cfg,
                                   const baseband_impedance& z_bb,
                                   double f_start_hz, double f_stop_hz,
                                   int n_points) {
  if (!(f_start_hz > 0.0) || !(f_stop_hz > f_start_hz))
    throw std::invalid_argument("impedance_sweep: need 0 < f_start < f_stop");
  if (n_points < 2)
    throw std::invalid_argument("impedance_sweep: need at least 2 points");

  const std::size_t n = static_cast<std::size_t>(n_points);
  std::vector<response_point> pts(n);
  const double span = f_stop_hz - f_start_hz;
  const auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double f = (i == n - 1)
                           ? f_stop_hz
                           : f_start_hz + span * double(i) / (n_points - 1);
      response_point p;
      p.f_hz = f;
      const translated_impedance t = translated_input_impedance(cfg, z_bb, f);
      if (!t.in_validity_window) p.flags |= point_flag::out_of_validity_window;
      if (std::isfinite(t.z_ohm.real()) && std::isfinite(t.z_ohm.imag())) {
        p.value = t.z_ohm;
      } else {
        p.value = {0.0, 0.0};
        p.flags |= point_flag::nonfinite_baseband;
      }
      pts[i] = p;
    }
  };

  // Points are independent, so chunks run concurrently; the preallocated
  // grid-order result keeps output bytes independent of scheduling.
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_workers = std::min<std::size_t>(hw, (n + 63) / 64);
  if (n_workers <= 1) {
    eval_range(0, n);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    std::mutex first_error_mutex;
    std::exception_ptr first_error;
    const std::size_t chunk = (n + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      workers.emplace_back([&, lo, hi] {
        try {
          eval_range(lo, hi);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(first_error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (std::thread& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  frequency_response fr;
  fr.unit = "ohm";
  fr.points = std::move(pts);
  validate(fr);
  return fr;
}

}  // namespace mixfirst
