// SPDX-License-Identifier: Apache-2.0
#include "mixfirst/oracle_sim.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mixfirst/errors.hpp"

namespace mixfirst {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
// Ideal switches and shorted branches are stamped as 1 uOhm so every phase
// matrix stays comfortably factorable.
constexpr double resistance_floor_ohm = 1e-6;
constexpr long long lo_periods_per_zero_beat = 100;

double source_v(const sim_scenario& s, double t) {
  return s.amplitude_v * std::sin(two_pi * s.f_rf_hz * t);
}

struct grid_plan {
  int n_per_lo;              // samples per LO period, multiple of 4
  double dt;                 // effective step, T_lo / n_per_lo
  long long settle_samples;  // samples before the first measurement window
  long long window_samples;  // samples per measurement window
};

grid_plan plan_grid(const sim_scenario& s) {
  if (!(s.amplitude_v >= 0.0))
    throw std::invalid_argument("sim_scenario: amplitude_v must be >= 0");
  if (!(s.f_rf_hz > 0.0))
    throw std::invalid_argument("sim_scenario: f_rf_hz must be > 0");
  if (s.settle_periods < 0 || s.measure_periods < 1)
    throw std::invalid_argument(
        "sim_scenario: need settle_periods >= 0 and measure_periods >= 1");
  if (!(s.load.r_ohm >= 0.0) || !(s.load.c_f >= 0.0))
    throw std::invalid_argument("sim_scenario: branch load must be passive");
  if (std::isinf(s.load.r_ohm) && s.load.c_f == 0.0)
    throw std::invalid_argument(
        "sim_scenario: branch needs a capacitor or finite resistance");

  const double t_lo = 1.0 / s.cfg.f_lo_hz();
  const double dt_max = t_lo / 64.0;
  const double dt_req = s.dt_s > 0.0 ? s.dt_s : dt_max;
  if (dt_req > dt_max * (1.0 + 1e-9))
    throw step_too_large("simulate: dt = " + std::to_string(dt_req) +
                         " s exceeds 1/(64*f_lo) = " + std::to_string(dt_max) +
                         " s");

  grid_plan g;
  const double quarters = t_lo / (4.0 * dt_req);
  g.n_per_lo = 4 * static_cast<int>(std::ceil(quarters - 1e-9));
  g.dt = t_lo / g.n_per_lo;

  const double beat = s.beat_hz();
  const double lo_per_beat = beat > 0.0
                                 ? s.cfg.f_lo_hz() / beat
                                 : static_cast<double>(lo_periods_per_zero_beat);
  g.settle_samples =
      std::llround(s.settle_periods * lo_per_beat) * g.n_per_lo;
  g.window_samples =
      std::llround(s.measure_periods * lo_per_beat) * g.n_per_lo;
  if (g.window_samples < 1)
    throw std::invalid_argument("sim_scenario: measurement window too short");
  return g;
}

// Single-frequency DFT accumulator; exact for integer cycles per window.
class dft_bin {
 public:
  explicit dft_bin(double f_hz) : f_hz_(f_hz) {}

  void add(double x, double t) {
    const double cycles = f_hz_ * t;
    const double ph = -two_pi * (cycles - std::floor(cycles));
    acc_ += x * std::complex<double>(std::cos(ph), std::sin(ph));
    ++n_;
  }

  // Amplitude of the cosine at f (complex phasor); mean value for f = 0.
  std::complex<double> amplitude() const {
    if (n_ == 0) return {0.0, 0.0};
    const std::complex<double> mean = acc_ / static_cast<double>(n_);
    return f_hz_ == 0.0 ? mean : 2.0 * mean;
  }

 private:
  double f_hz_;
  std::complex<double> acc_{0.0, 0.0};
  long long n_ = 0;
};

// The five-node switched network. Node 0 is the RF node; nodes 1..4 are the
// branch baseband nodes. Trapezoidal companion models for the branch
// capacitors; the capacitor current is re-derived from branch KCL at the
// start of every step, which doubles as the consistent restart at switch
// edges (node voltages are continuous, capacitor currents are not).
class switched_network {
 public:
  using vec5 = Eigen::Matrix<double, 5, 1>;

  switched_network(const sim_scenario& s, const grid_plan& g) : s_(s), g_(g) {
    g_ra_ = 1.0 / s.cfg.ra_ohm();
    g_sw_ = 1.0 / std::max(s.cfg.rsw_ohm(), resistance_floor_ohm);
    g_r_ = std::isinf(s.load.r_ohm)
               ? 0.0
               : 1.0 / std::max(s.load.r_ohm, resistance_floor_ohm);
    c_ = s.load.c_f;
    gm_half_ = 0.5 * s.load.gm_s;
    const double gc = c_ > 0.0 ? 2.0 * c_ / g_.dt : 0.0;

    for (int ph = 0; ph < 4; ++ph) {
      Eigen::Matrix<double, 5, 5> a = Eigen::Matrix<double, 5, 5>::Zero();
      a(0, 0) = g_ra_;
      for (int k = 0; k < 4; ++k) {
        a(1 + k, 1 + k) += g_r_ + gc;
        // Quadrature VCCS: current out of branch k is gm/2*(v[k-1] - v[k+1]).
        // Branch k+1 lags branch k by a quarter LO period, and this
        // orientation makes positive gm shift the response above the LO.
        a(1 + k, 1 + (k + 3) % 4) += gm_half_;
        a(1 + k, 1 + (k + 1) % 4) -= gm_half_;
      }
      const int on = conducting_in_phase(ph);
      a(0, 0) += g_sw_;
      a(0, 1 + on) -= g_sw_;
      a(1 + on, 0) -= g_sw_;
      a(1 + on, 1 + on) += g_sw_;
      lu_[ph].compute(a);
    }
    v_.setZero();
  }

  int conducting_in_phase(int ph) const {
    return s_.topology == sim_topology::single_switch_on ? 0 : ph;
  }

  int phase_of_step(long long n) const {
    if (s_.topology == sim_topology::single_switch_on) return 0;
    return static_cast<int>((n / (g_.n_per_lo / 4)) % 4);
  }

  // Advance one step; afterwards v() holds the solution at (n+1)*dt.
  void step(long long n) {
    const int ph = phase_of_step(n);
    const int on = conducting_in_phase(ph);
    const double t0 = static_cast<double>(n) * g_.dt;
    const double t1 = static_cast<double>(n + 1) * g_.dt;

    // Phase-consistent RF voltage at the step start (jumps at edges).
    v_[0] = (g_ra_ * source_v(s_, t0) + g_sw_ * v_[1 + on]) / (g_ra_ + g_sw_);

    vec5 rhs = vec5::Zero();
    rhs[0] = g_ra_ * source_v(s_, t1);
    if (c_ > 0.0) {
      const double gc = 2.0 * c_ / g_.dt;
      for (int k = 0; k < 4; ++k)
        rhs[1 + k] = gc * v_[1 + k] + into_cap(k, on);
    }
    v_ = lu_[ph].solve(rhs);
    last_on_ = on;
  }

  const vec5& v() const { return v_; }
  int last_on() const { return last_on_; }

  double i_source(double t) const { return (source_v(s_, t) - v_[0]) * g_ra_; }

  // RF-node voltage at sample (n+1)*dt for spectral use. The branch voltages
  // are continuous but v_rf jumps at switch edges; sampling the mean of the
  // left and right limits there keeps single-bin DFT estimates second-order
  // accurate in dt instead of first-order.
  double sampled_v_rf(long long n) const {
    const int on_next = conducting_in_phase(phase_of_step(n + 1));
    if (on_next == last_on_) return v_[0];
    const double t1 = static_cast<double>(n + 1) * g_.dt;
    const double right = (g_ra_ * source_v(s_, t1) + g_sw_ * v_[1 + on_next]) /
                         (g_ra_ + g_sw_);
    return 0.5 * (v_[0] + right);
  }

  double sampled_i_source(long long n) const {
    const double t1 = static_cast<double>(n + 1) * g_.dt;
    return (source_v(s_, t1) - sampled_v_rf(n)) * g_ra_;
  }

  // Current into the branch-k capacitor implied by node KCL.
  double into_cap(int k, int on) const {
    double i = -g_r_ * v_[1 + k] -
               gm_half_ * (v_[1 + (k + 3) % 4] - v_[1 + (k + 1) % 4]);
    if (k == on) i += g_sw_ * (v_[0] - v_[1 + k]);
    return i;
  }

  double g_sw() const { return g_sw_; }
  double g_r() const { return g_r_; }
  double gm_half() const { return gm_half_; }

 private:
  sim_scenario s_;
  grid_plan g_;
  double g_ra_, g_sw_, g_r_, c_, gm_half_;
  Eigen::PartialPivLU<Eigen::Matrix<double, 5, 5>> lu_[4];
  vec5 v_;
  int last_on_ = 0;
};

}  // namespace

double sim_scenario::beat_hz() const { return std::abs(f_rf_hz - cfg.f_lo_hz()); }

int conducting_switch(const mixer_config& cfg, double t_s) {
  const double cycles = t_s * cfg.f_lo_hz();
  const double frac = cycles - std::floor(cycles);
  const int ph = static_cast<int>(frac * 4.0);
  return ph > 3 ? 3 : ph;
}

sim_trace simulate(const sim_scenario& s) {
  const grid_plan g = plan_grid(s);
  switched_network net(s, g);

  const long long n_total = g.settle_samples + g.window_samples;
  const long long power_start = g.settle_samples;

  sim_trace tr;
  tr.dt_s = g.dt;
  tr.t_s.reserve(n_total + 1);
  tr.v.reserve(n_total + 1);
  tr.i_source_a.reserve(n_total + 1);

  tr.t_s.push_back(0.0);
  tr.v.push_back({0.0, 0.0, 0.0, 0.0, 0.0});
  tr.i_source_a.push_back(net.i_source(0.0));

  double p_src = 0.0, p_diss = 0.0, p_cap = 0.0, p_gm = 0.0;
  long long p_n = 0;

  for (long long n = 0; n < n_total; ++n) {
    net.step(n);
    const double t = static_cast<double>(n + 1) * g.dt;
    const auto& v = net.v();
    const double i_src = net.i_source(t);

    tr.t_s.push_back(t);
    tr.v.push_back({v[0], v[1], v[2], v[3], v[4]});
    tr.i_source_a.push_back(i_src);

    if (n >= power_start) {
      const int on = net.last_on();
      const double vs = source_v(s, t);
      const double i_sw = (v[0] - v[1 + on]) * net.g_sw();
      p_src += vs * i_src;
      p_diss += i_src * i_src * s.cfg.ra_ohm() + i_sw * i_sw / net.g_sw();
      for (int k = 0; k < 4; ++k) {
        p_diss += v[1 + k] * v[1 + k] * net.g_r();
        p_cap += v[1 + k] * net.into_cap(k, on);
        p_gm += v[1 + k] * net.gm_half() *
                (v[1 + (k + 3) % 4] - v[1 + (k + 1) % 4]);
      }
      ++p_n;
    }
  }

  if (p_n > 0) {
    tr.power.source_avg_w = p_src / p_n;
    tr.power.dissipated_avg_w = p_diss / p_n;
    tr.power.cap_avg_w = p_cap / p_n;
    tr.power.gm_avg_w = p_gm / p_n;
  }
  return tr;
}

measured_impedance measure_input_impedance(const sim_scenario& s) {
  const grid_plan g = plan_grid(s);
  switched_network net(s, g);

  for (long long n = 0; n < g.settle_samples; ++n) net.step(n);

  std::complex<double> z[2];
  for (int w = 0; w < 2; ++w) {
    dft_bin v_bin(s.f_rf_hz);
    dft_bin i_bin(s.f_rf_hz);
    const long long begin = g.settle_samples + w * g.window_samples;
    for (long long n = begin; n < begin + g.window_samples; ++n) {
      net.step(n);
      const double t = static_cast<double>(n + 1) * g.dt;
      v_bin.add(net.sampled_v_rf(n), t);
      i_bin.add(net.sampled_i_source(n), t);
    }
    const std::complex<double> i_amp = i_bin.amplitude();
    if (std::abs(i_amp) == 0.0)
      throw model_error("measure_input_impedance: no source current at f_rf");
    z[w] = v_bin.amplitude() / i_amp;
  }

  const double delta = std::abs(z[1] - z[0]) / std::abs(z[1]);
  if (delta > 0.01)
    throw not_settled(
        "measure_input_impedance: windows disagree by " +
        std::to_string(delta * 100.0) +
        "% (> 1%); increase settle_periods");
  return {z[1], z[0], delta, s.f_rf_hz, g.dt};
}

std::vector<spectrum_line> sideband_spectrum(const sim_scenario& s, int node) {
  if (node < 0 || node > 4)
    throw std::invalid_argument("sideband_spectrum: node must be in [0, 4]");
  const grid_plan g = plan_grid(s);
  switched_network net(s, g);

  for (long long n = 0; n < g.settle_samples; ++n) net.step(n);

  constexpr int k_min = -3, k_max = 3;
  std::vector<dft_bin> bins;
  for (int k = k_min; k <= k_max; ++k)
    bins.emplace_back(s.f_rf_hz + k * s.cfg.f_lo_hz());

  const long long begin = g.settle_samples;
  for (long long n = begin; n < begin + g.window_samples; ++n) {
    net.step(n);
    const double t = static_cast<double>(n + 1) * g.dt;
    const double x = node == node_rf ? net.sampled_v_rf(n) : net.v()[node];
    for (auto& b : bins) b.add(x, t);
  }

  std::vector<spectrum_line> lines;
  lines.reserve(bins.size());
  for (int k = k_min; k <= k_max; ++k)
    lines.push_back({s.f_rf_hz + k * s.cfg.f_lo_hz(),
                     bins[static_cast<std::size_t>(k - k_min)].amplitude(), k});
  return lines;
}

}  // namespace mixfirst
