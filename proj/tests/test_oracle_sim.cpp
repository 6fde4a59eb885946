// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "mixfirst/errors.hpp"
#include "mixfirst/oracle_sim.hpp"

using namespace mixfirst;
using doctest::Approx;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

sim_scenario stock_scenario() {
  sim_scenario s;
  s.cfg = mixer_config(50.0, 5.0, 1e9);
  s.load = {274.6, 55e-12, 0.0};
  s.f_rf_hz = 1.01e9;
  return s;
}

const spectrum_line& line_at(const std::vector<spectrum_line>& lines, int k) {
  for (const spectrum_line& l : lines)
    if (l.sideband_k == k) return l;
  REQUIRE(false);
  return lines.front();
}
}  // namespace

TEST_CASE("scenario validation rejects inconsistent setups") {
  sim_scenario s = stock_scenario();
  s.amplitude_v = -1.0;
  CHECK_THROWS_AS(simulate(s), std::invalid_argument);
  s = stock_scenario();
  s.f_rf_hz = 0.0;
  CHECK_THROWS_AS(simulate(s), std::invalid_argument);
  s = stock_scenario();
  s.measure_periods = 0;
  CHECK_THROWS_AS(simulate(s), std::invalid_argument);
  s = stock_scenario();
  s.load.r_ohm = -5.0;
  CHECK_THROWS_AS(simulate(s), std::invalid_argument);
  s = stock_scenario();
  s.load.r_ohm = std::numeric_limits<double>::infinity();
  s.load.c_f = 0.0;  // branch with no element at all
  CHECK_THROWS_AS(simulate(s), std::invalid_argument);
}

TEST_CASE("a step coarser than 64 samples per LO period is refused") {
  sim_scenario s = stock_scenario();
  s.dt_s = 1.0 / (32.0 * s.cfg.f_lo_hz());
  CHECK_THROWS_AS(simulate(s), step_too_large);
  CHECK_THROWS_AS(measure_input_impedance(s), step_too_large);
}

TEST_CASE("requested steps snap onto the quarter-period grid") {
  sim_scenario s = stock_scenario();
  s.dt_s = 0.9e-11;  // does not divide the quarter period
  const sim_trace tr = simulate(s);
  CHECK(tr.dt_s <= s.dt_s * (1.0 + 1e-12));
  const double per_quarter = 0.25 / s.cfg.f_lo_hz() / tr.dt_s;
  CHECK(per_quarter == Approx(std::round(per_quarter)).epsilon(1e-9));
}

TEST_CASE("exactly one switch conducts at every instant") {
  const mixer_config cfg(50.0, 5.0, 1e9);
  const double t_lo = 1.0 / cfg.f_lo_hz();
  int counts[4] = {0, 0, 0, 0};
  const int n = 4096;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * (2.0 * t_lo / n);  // two LO periods
    const int sw = conducting_switch(cfg, t);
    REQUIRE(sw >= 0);
    REQUIRE(sw <= 3);
    ++counts[sw];
  }
  for (int k = 0; k < 4; ++k) CHECK(counts[k] == n / 4);
  // The quarter windows appear in clock order.
  CHECK(conducting_switch(cfg, 0.1 * t_lo) == 0);
  CHECK(conducting_switch(cfg, 0.3 * t_lo) == 1);
  CHECK(conducting_switch(cfg, 0.6 * t_lo) == 2);
  CHECK(conducting_switch(cfg, 0.9 * t_lo) == 3);
}

TEST_CASE("an always-on switch with a resistive branch is a pure divider") {
  sim_scenario s = stock_scenario();
  s.topology = sim_topology::single_switch_on;
  s.load = {274.6, 0.0, 0.0};
  s.settle_periods = 0;
  s.measure_periods = 1;
  const sim_trace tr = simulate(s);
  const double r_total = s.cfg.ra_ohm() + s.cfg.rsw_ohm() + s.load.r_ohm;
  for (std::size_t i = 0; i < tr.t_s.size(); ++i) {
    const double vs = s.amplitude_v * std::sin(two_pi * s.f_rf_hz * tr.t_s[i]);
    const double current = vs / r_total;
    CHECK(std::abs(tr.v[i][node_bb0] - current * s.load.r_ohm) <
          1e-9 * s.amplitude_v);
    CHECK(std::abs(tr.v[i][node_rf] - (vs - current * s.cfg.ra_ohm())) <
          1e-9 * s.amplitude_v);
  }
}

TEST_CASE("an always-on switch with an RC branch matches the closed-form transient") {
  sim_scenario s = stock_scenario();
  s.topology = sim_topology::single_switch_on;
  s.dt_s = 1.0 / (128.0 * s.cfg.f_lo_hz());
  s.settle_periods = 0;
  s.measure_periods = 1;
  const sim_trace tr = simulate(s);

  const double r_src = s.cfg.ra_ohm() + s.cfg.rsw_ohm();
  const double g = 1.0 / r_src + 1.0 / s.load.r_ohm;
  const double tau = s.load.c_f / g;
  const double w = two_pi * s.f_rf_hz;
  // Phasor of the branch voltage for vs = A*sin(wt) = Im{A e^{jwt}}.
  const std::complex<double> h =
      (1.0 / r_src) / std::complex<double>(g, w * s.load.c_f);
  const std::complex<double> v1_ph = s.amplitude_v * h;
  const double v1_amp = std::abs(v1_ph);

  for (std::size_t i = 0; i < tr.t_s.size(); ++i) {
    const double t = tr.t_s[i];
    const double steady =
        std::imag(v1_ph * std::exp(std::complex<double>(0.0, w * t)));
    const double exact = steady - std::imag(v1_ph) * std::exp(-t / tau);
    CHECK(std::abs(tr.v[i][node_bb0] - exact) < 1e-3 * v1_amp);
  }
}

TEST_CASE("zero source amplitude produces an identically zero response") {
  sim_scenario s = stock_scenario();
  s.amplitude_v = 0.0;
  s.load.gm_s = 3.46e-3;
  const sim_trace tr = simulate(s);
  for (std::size_t i = 0; i < tr.t_s.size(); ++i) {
    for (double v : tr.v[i]) CHECK(v == 0.0);
    CHECK(tr.i_source_a[i] == 0.0);
  }
}

TEST_CASE("the network is linear: doubling the drive doubles every line") {
  sim_scenario a = stock_scenario();
  a.load.gm_s = 2e-3;
  sim_scenario b = a;
  b.amplitude_v = 2.0 * a.amplitude_v;
  const auto la = sideband_spectrum(a, node_bb0);
  const auto lb = sideband_spectrum(b, node_bb0);
  REQUIRE(la.size() == lb.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    CHECK(std::abs(lb[i].amplitude_v - 2.0 * la[i].amplitude_v) <=
          1e-6 * std::abs(la[i].amplitude_v) + 1e-18);
  }
}

TEST_CASE("the RF drive lands at baseband as the k = -1 line") {
  const sim_scenario s = stock_scenario();
  const auto lines = sideband_spectrum(s, node_bb0);
  const spectrum_line& down = line_at(lines, -1);
  CHECK(down.f_hz == 10e6);
  for (const spectrum_line& l : lines)
    if (l.sideband_k != -1)
      CHECK(std::abs(l.amplitude_v) < std::abs(down.amplitude_v));
}

TEST_CASE("driving exactly at the LO lands the k = -1 line at DC") {
  sim_scenario s = stock_scenario();
  s.f_rf_hz = s.cfg.f_lo_hz();
  const auto lines = sideband_spectrum(s, node_bb0);
  const spectrum_line& dc = line_at(lines, -1);
  CHECK(dc.f_hz == 0.0);
  for (const spectrum_line& l : lines)
    if (l.sideband_k != -1)
      CHECK(std::abs(l.amplitude_v) < std::abs(dc.amplitude_v));
}

TEST_CASE("translation harmonics stay an order of magnitude down") {
  const sim_scenario s = stock_scenario();
  const auto lines = sideband_spectrum(s, node_bb0);
  const double main_power = std::norm(line_at(lines, -1).amplitude_v);
  double other = 0.0;
  for (const spectrum_line& l : lines)
    if (l.sideband_k < -1 || l.sideband_k > 1)
      other += std::norm(l.amplitude_v);
  CHECK(other < 0.10 * main_power);
}

TEST_CASE("purely resistive loads balance source and dissipated power") {
  sim_scenario s = stock_scenario();
  s.load = {274.6, 0.0, 0.0};
  const sim_trace tr = simulate(s);
  CHECK(tr.power.source_avg_w > 0.0);
  CHECK(tr.power.dissipated_avg_w ==
        Approx(tr.power.source_avg_w).epsilon(1e-10));
  CHECK(tr.power.cap_avg_w == Approx(0.0).scale(tr.power.source_avg_w));
  CHECK(tr.power.gm_avg_w == 0.0);
}

TEST_CASE("power bookkeeping closes exactly and the gm stage is lossless") {
  sim_scenario s = stock_scenario();
  s.load.gm_s = 3.46e-3;
  const sim_trace tr = simulate(s);
  const double closure = tr.power.source_avg_w - tr.power.dissipated_avg_w -
                         tr.power.cap_avg_w - tr.power.gm_avg_w;
  CHECK(std::abs(closure) <= 1e-9 * tr.power.source_avg_w);
  // Quadrature coupling moves no net power: the per-sample branch terms are
  // an antisymmetric sum, so the average cancels to accumulation rounding.
  CHECK(std::abs(tr.power.gm_avg_w) <= 1e-12 * tr.power.source_avg_w);
  CHECK(std::abs(tr.power.cap_avg_w) < 1e-3 * tr.power.source_avg_w);
}

TEST_CASE("halving the step moves the measured impedance by less than 0.5%") {
  sim_scenario s = stock_scenario();
  const measured_impedance coarse = measure_input_impedance(s);
  s.dt_s = 1.0 / (128.0 * s.cfg.f_lo_hz());
  const measured_impedance fine = measure_input_impedance(s);
  CHECK(std::abs(coarse.z_ohm - fine.z_ohm) < 0.005 * std::abs(fine.z_ohm));
}

TEST_CASE("the measurement is invariant to extra settling") {
  sim_scenario s = stock_scenario();
  const measured_impedance base = measure_input_impedance(s);
  s.settle_periods = 45;
  const measured_impedance longer = measure_input_impedance(s);
  CHECK(std::abs(base.z_ohm - longer.z_ohm) < 1e-3 * std::abs(longer.z_ohm));
}

TEST_CASE("measuring straight out of the initial transient is reported") {
  sim_scenario s = stock_scenario();
  s.settle_periods = 0;
  s.measure_periods = 1;
  CHECK_THROWS_AS(measure_input_impedance(s), not_settled);
}

TEST_CASE("repeated runs are bit-identical") {
  const sim_scenario s = stock_scenario();
  const measured_impedance a = measure_input_impedance(s);
  const measured_impedance b = measure_input_impedance(s);
  CHECK(a.z_ohm.real() == b.z_ohm.real());
  CHECK(a.z_ohm.imag() == b.z_ohm.imag());
  CHECK(a.window_rel_delta == b.window_rel_delta);
}

TEST_CASE("trace dimensions follow the scenario windows") {
  sim_scenario s = stock_scenario();
  s.settle_periods = 2;
  s.measure_periods = 1;
  const sim_trace tr = simulate(s);
  CHECK(tr.dt_s == Approx(1.0 / (64.0 * s.cfg.f_lo_hz())));
  // 3 beat periods at 100 LO periods per beat, 64 samples each, plus t = 0.
  CHECK(tr.t_s.size() == 3 * 100 * 64 + 1);
  CHECK(tr.v.size() == tr.t_s.size());
  CHECK(tr.i_source_a.size() == tr.t_s.size());
  for (std::size_t i = 1; i < tr.t_s.size(); ++i)
    CHECK(tr.t_s[i] > tr.t_s[i - 1]);
}
