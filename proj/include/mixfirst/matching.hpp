// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "mixfirst/complex_impedance.hpp"
#include "mixfirst/mixer_lti.hpp"
#include "mixfirst/tia_rgc.hpp"

namespace mixfirst {

// Reflection coefficient (z - ra) / (z + ra). Throws degenerate_denominator
// when |z + ra| vanishes.
std::complex<double> s11(std::complex<double> z_ohm, double ra_ohm);

// 20*log10|gamma|, floored at -100 dB so a perfect match stays printable.
double s11_db(std::complex<double> gamma);

// Binary-weighted bank of parallel switch units; enabling more units lowers
// the effective switch resistance.
class switch_bank {
 public:
  switch_bank(double unit_rsw_ohm, int n_units);
  switch_bank(double unit_rsw_ohm, int n_units, unsigned enabled_mask);

  double unit_rsw_ohm() const { return unit_rsw_ohm_; }
  int n_units() const { return n_units_; }
  unsigned enabled_mask() const { return enabled_mask_; }
  double effective_rsw_ohm() const;
  switch_bank with_mask(unsigned enabled_mask) const;

 private:
  double unit_rsw_ohm_;
  int n_units_;
  unsigned enabled_mask_;
};

// Which side of the LO a positive gm setting moves the response toward.
enum class shift_sign { up, down };

struct tune_result {
  double gm_s = 0.0;             // stage setting magnitude
  unsigned enabled_mask = 0;     // 0 when no bank was involved
  double achieved_s11_db = 0.0;
  double center_f_hz = 0.0;
};

// Analytic receiver: mixer configuration plus a baseband family parameterized
// by the gm setting. Frequency translation itself comes from mixer_lti.
class receiver_model {
 public:
  const mixer_config& cfg() const { return cfg_; }
  double gm_s() const { return gm_mag_; }
  shift_sign sign() const { return sign_; }
  std::optional<double> c_bb_f() const { return c_bb_f_; }

  // Baseband seen by the mixer for the current gm setting (signed offset).
  baseband_impedance baseband() const;

  // Window-tolerant single-point evaluation.
  std::complex<double> input_impedance(double f_hz) const;
  frequency_response sweep(double f_start_hz, double f_stop_hz,
                           int n_points) const;

  receiver_model with_rsw(double rsw_ohm) const;
  receiver_model with_gm(double gm_s, shift_sign sign) const;

  friend receiver_model compose_receiver(const mixer_config& cfg,
                                         baseband_impedance fixed);
  friend receiver_model compose_receiver(const mixer_config& cfg,
                                         const complex_impedance_spec& spec,
                                         shift_sign sign);
  friend receiver_model compose_receiver(const mixer_config& cfg,
                                         const rgc_params& tia, double gm_s,
                                         shift_sign sign);
  friend tune_result tune_center(receiver_model& model, double target_f_hz);

 private:
  receiver_model() = default;

  mixer_config cfg_;
  // gm magnitude -> baseband in the natural orientation (center at -f_oc).
  std::function<baseband_impedance(double)> family_down_;
  double gm_mag_ = 0.0;
  shift_sign sign_ = shift_sign::up;
  std::optional<double> c_bb_f_;
};

// Fixed (non-tunable) baseband; tune_center rejects such a model.
receiver_model compose_receiver(const mixer_config& cfg,
                                baseband_impedance fixed);

// R||C plus quadrature gm baseband.
receiver_model compose_receiver(const mixer_config& cfg,
                                const complex_impedance_spec& spec,
                                shift_sign sign = shift_sign::up);

// TIA-based baseband wrapped with a quadrature gm stage.
receiver_model compose_receiver(const mixer_config& cfg, const rgc_params& tia,
                                double gm_s, shift_sign sign = shift_sign::up);

// Sets gm = 2*pi*c_bb*|target - f_lo| with the direction needed to land on
// the requested side, then locates the achieved analytic peak. Throws
// offset_out_of_range when the composition has no gm stage or the offset
// falls outside the model validity window.
tune_result tune_center(receiver_model& model, double target_f_hz);

// Exhaustive search over all non-empty unit masks for the lowest |S11| at
// center_f_hz. Ties prefer fewer enabled units, then the lower mask id, so
// the result does not depend on enumeration order.
tune_result trim_switch_bank(const switch_bank& bank,
                             const receiver_model& model, double ra_ohm,
                             double center_f_hz);

}  // namespace mixfirst
