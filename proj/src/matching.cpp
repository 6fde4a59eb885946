// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "mixfirst/errors.hpp"

namespace mixfirst {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double s11_floor_db = -100.0;
}  // namespace

std::complex<double> s11(std::complex<double> z_ohm, double ra_ohm) {
  if (!(ra_ohm > 0.0))
    throw std::invalid_argument("s11: ra_ohm must be > 0");
  const std::complex<double> den = z_ohm + ra_ohm;
  if (std::abs(den) < 1e-12 * (ra_ohm + std::abs(z_ohm)))
    throw degenerate_denominator("s11: |z + ra| vanished");
  return (z_ohm - ra_ohm) / den;
}

double s11_db(std::complex<double> gamma) {
  const double mag = std::abs(gamma);
  if (!(mag > 0.0)) return s11_floor_db;
  return std::max(20.0 * std::log10(mag), s11_floor_db);
}

switch_bank::switch_bank(double unit_rsw_ohm, int n_units)
    : switch_bank(unit_rsw_ohm, n_units,
                  n_units >= 32 ? 0xffffffffu : ((1u << n_units) - 1u)) {}

switch_bank::switch_bank(double unit_rsw_ohm, int n_units, unsigned enabled_mask)
    : unit_rsw_ohm_(unit_rsw_ohm), n_units_(n_units), enabled_mask_(enabled_mask) {
  if (!(unit_rsw_ohm > 0.0))
    throw std::invalid_argument("switch_bank: unit_rsw_ohm must be > 0");
  if (n_units < 1 || n_units > 16)
    throw std::invalid_argument("switch_bank: n_units must be in [1, 16]");
  if (enabled_mask == 0u || (enabled_mask >> n_units) != 0u)
    throw std::invalid_argument(
        "switch_bank: enabled_mask must select at least one existing unit");
}

double switch_bank::effective_rsw_ohm() const {
  return unit_rsw_ohm_ / std::popcount(enabled_mask_);
}

switch_bank switch_bank::with_mask(unsigned enabled_mask) const {
  return switch_bank(unit_rsw_ohm_, n_units_, enabled_mask);
}

baseband_impedance receiver_model::baseband() const {
  baseband_impedance natural = family_down_(gm_mag_);
  if (sign_ == shift_sign::down || gm_mag_ == 0.0) return natural;
  // Mirrored quadrature wiring: swapping I and Q conjugates the envelope,
  // so the up-shifted family is z(f) = conj(z_down(-f)).
  return [natural](double f_hz) { return std::conj(natural(-f_hz)); };
}

std::complex<double> receiver_model::input_impedance(double f_hz) const {
  return translated_input_impedance(cfg_, baseband(), f_hz).z_ohm;
}

frequency_response receiver_model::sweep(double f_start_hz, double f_stop_hz,
                                         int n_points) const {
  return impedance_sweep(cfg_, baseband(), f_start_hz, f_stop_hz, n_points);
}

receiver_model receiver_model::with_rsw(double rsw_ohm) const {
  receiver_model m = *this;
  m.cfg_ = cfg_.with_rsw(rsw_ohm);
  return m;
}

receiver_model receiver_model::with_gm(double gm_s, shift_sign sign) const {
  if (!(gm_s >= 0.0))
    throw std::invalid_argument("receiver_model: gm_s must be >= 0");
  receiver_model m = *this;
  m.gm_mag_ = gm_s;
  m.sign_ = sign;
  return m;
}

receiver_model compose_receiver(const mixer_config& cfg,
                                baseband_impedance fixed) {
  receiver_model m;
  m.cfg_ = cfg;
  m.family_down_ = [fixed](double) { return fixed; };
  return m;
}

receiver_model compose_receiver(const mixer_config& cfg,
                                const complex_impedance_spec& spec,
                                shift_sign sign) {
  receiver_model m;
  m.cfg_ = cfg;
  m.family_down_ = [spec](double gm_s) {
    const complex_impedance_spec at_gm = spec.with_gm(gm_s);
    return baseband_impedance(
        [at_gm](double f_hz) { return zc_at(at_gm, f_hz); });
  };
  m.gm_mag_ = spec.gm_s();
  m.sign_ = sign;
  m.c_bb_f_ = spec.c_bb_f();
  return m;
}

receiver_model compose_receiver(const mixer_config& cfg, const rgc_params& tia,
                                double gm_s, shift_sign sign) {
  if (!(gm_s >= 0.0))
    throw std::invalid_argument("compose_receiver: gm_s must be >= 0");
  if (!tia.c_bb_f)
    throw missing_cbb("compose_receiver: rgc_params.c_bb_f not set");
  validate(tia);
  receiver_model m;
  m.cfg_ = cfg;
  m.family_down_ = [tia](double gm) { return compose_complex_tia(tia, gm); };
  m.gm_mag_ = gm_s;
  m.sign_ = sign;
  m.c_bb_f_ = tia.c_bb_f;
  return m;
}

tune_result tune_center(receiver_model& model, double target_f_hz) {
  if (!model.c_bb_f_)
    throw offset_out_of_range(
        "tune_center: composition has no tunable gm stage");
  const double f_lo = model.cfg().f_lo_hz();
  const double offset = target_f_hz - f_lo;
  if (std::abs(offset) >= 0.5 * f_lo)
    throw offset_out_of_range(
        "tune_center: |target - f_lo| must stay below f_lo/2");

  model.gm_mag_ = two_pi * *model.c_bb_f_ * std::abs(offset);
  model.sign_ = offset >= 0.0 ? shift_sign::up : shift_sign::down;

  // Locate the achieved peak around the requested center.
  const double span = std::max(2.0 * std::abs(offset), 0.02 * f_lo);
  const frequency_response fr =
      model.sweep(f_lo - span, f_lo + span, 2001);
  const response_point& pk = peak_magnitude_point(fr);
  const double db = s11_db(s11(pk.value, model.cfg().ra_ohm()));
  return {model.gm_mag_, 0u, db, pk.f_hz};
}

tune_result trim_switch_bank(const switch_bank& bank,
                             const receiver_model& model, double ra_ohm,
                             double center_f_hz) {
  const unsigned n_masks = 1u << bank.n_units();
  double best_db = 0.0;
  int best_units = 0;
  unsigned best_mask = 0;
  for (unsigned mask = 1; mask < n_masks; ++mask) {
    const double rsw = bank.unit_rsw_ohm() / std::popcount(mask);
    const std::complex<double> z =
        model.with_rsw(rsw).input_impedance(center_f_hz);
    const double db = s11_db(s11(z, ra_ohm));
    const int units = std::popcount(mask);
    if (best_mask == 0 || db < best_db ||
        (db == best_db &&
         (units < best_units || (units == best_units && mask < best_mask)))) {
      best_db = db;
      best_units = units;
      best_mask = mask;
    }
  }
  return {model.gm_s(), best_mask, best_db, center_f_hz};
}

}  // namespace mixfirst
